#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "cocond/engine.hpp"
#include "cocond/problem.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compound conditionals: coherence checks, bounds and tables"};
  app.require_subcommand(1);

  std::string file, target, format = "text";
  size_t members = 2;
  uint64_t seed = 0;

  auto add_common = [&](CLI::App* sub, bool with_target) {
    sub->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    if (with_target)
      sub->add_option("--target", target,
                      "compound expression, e.g. \"X ^ Y\" or \"qc(X, Y)\"");
  };

  CLI::App* check =
      app.add_subcommand("check", "decide coherence of the file's assessment");
  check->add_option("file", file, "problem file")->required();
  add_common(check, false);

  CLI::App* bounds = app.add_subcommand(
      "bounds", "coherent prevision interval for one more compound");
  bounds->add_option("file", file, "problem file")->required();
  add_common(bounds, true);

  CLI::App* table =
      app.add_subcommand("table", "constituent value table of a compound");
  table->add_option("file", file, "problem file")->required();
  add_common(table, true);

  CLI::App* constituents = app.add_subcommand(
      "constituents", "list the constituents generated by the family");
  constituents->add_option("file", file, "problem file")->required();
  add_common(constituents, false);

  CLI::App* expand = app.add_subcommand(
      "expand", "inclusion-exclusion expansion of a disjunction's prevision");
  expand->add_option("file", file, "problem file")->required();
  add_common(expand, true);

  CLI::App* sample =
      app.add_subcommand("sample", "draw a seeded coherent assessment");
  sample->add_option("-n,--members", members, "family size (1 to 6)")
      ->check(CLI::Range(1, 6));
  sample->add_option("--seed", seed, "random seed");
  add_common(sample, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cocond::RunResult r;
    if (sample->parsed()) {
      r = cocond::run_sample(members, seed);
    } else {
      cocond::ProblemFile p = cocond::parse_problem(read_file(file));
      std::optional<std::string> t =
          target.empty() ? std::nullopt : std::optional<std::string>(target);
      if (check->parsed())
        r = cocond::run_check(p);
      else if (bounds->parsed())
        r = cocond::run_bounds(p, t);
      else if (table->parsed())
        r = cocond::run_table(p, t);
      else if (constituents->parsed())
        r = cocond::run_constituents(p);
      else
        r = cocond::run_expand(p, t);
    }
    std::cout << (format == "json" ? r.json : r.text);
    return r.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
