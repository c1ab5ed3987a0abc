#include "cocond/engine.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "cocond/coherence.hpp"
#include "cocond/compound.hpp"

namespace cocond {

namespace {

using nlohmann::json;

Symbol symbol_for(const CompoundRef& c) {
  switch (c.op) {
    case CompoundRef::Op::Conjunction:
      return Symbol::conj(c.mask);
    case CompoundRef::Op::Disjunction:
      return Symbol::disj(c.mask);
    case CompoundRef::Op::Quasi:
      return Symbol::named("z" + subset_indices(c.mask));
  }
  throw std::logic_error("unreachable");
}

CRQ crq_for(FamilyAlgebra& alg, const CompoundRef& c) {
  switch (c.op) {
    case CompoundRef::Op::Conjunction:
      return alg.conjunction(c.mask);
    case CompoundRef::Op::Disjunction:
      return alg.disjunction(c.mask);
    case CompoundRef::Op::Quasi: {
      size_t i = std::countr_zero(c.mask);
      size_t j = 31 - std::countl_zero(c.mask);
      return alg.quasi_conjunction(i, j, symbol_for(c));
    }
  }
  throw std::logic_error("unreachable");
}

struct Instance {
  std::shared_ptr<const ConstituentSpace> space;
  std::unique_ptr<FamilyAlgebra> alg;
  std::map<Symbol, Rat> bindings;
  Assessment assessment;
};

Instance build_instance(const ProblemFile& p) {
  if (p.family.empty())
    throw std::invalid_argument("the file defines no conditional events");
  AtomSet atoms(p.atom_names);
  ConstraintSet cs;
  for (const Event& e : p.constraints) cs.add(e);
  Instance inst;
  inst.space = enumerate_constituents(p.family, std::move(atoms), std::move(cs));
  inst.alg = std::make_unique<FamilyAlgebra>(inst.space);
  for (const AssessmentLine& line : p.assessments) {
    inst.assessment.crqs.push_back(crq_for(*inst.alg, line.target));
    inst.assessment.values.push_back(line.value);
    inst.bindings.emplace(symbol_for(line.target), line.value);
  }
  return inst;
}

// Signed prevision test applies when every nonempty sub-conjunction of a
// logically independent family carries an assessment.
bool fast_eligible(const ProblemFile& p, const Instance& inst,
                   std::map<uint32_t, Rat>* M) {
  size_t n = p.family.size();
  if (n == 0 || 2 * n > 20) return false;
  uint32_t full = (uint32_t{1} << n) - 1;
  if (p.assessments.size() != full) return false;
  std::map<uint32_t, Rat> m;
  for (const AssessmentLine& line : p.assessments) {
    if (line.target.op != CompoundRef::Op::Conjunction) return false;
    m.emplace(line.target.mask, line.value);
  }
  if (m.size() != full) return false;
  std::vector<Event> basics;
  for (const ConditionalEvent& ce : p.family) {
    basics.push_back(ce.consequent);
    basics.push_back(ce.antecedent);
  }
  if (!events_logically_independent(basics, inst.space->atoms,
                                    inst.space->constraints))
    return false;
  *M = std::move(m);
  return true;
}

CompoundRef resolve_target(const ProblemFile& p,
                           const std::optional<std::string>& target_text,
                           Query::Kind kind, const char* query_name) {
  if (target_text) return parse_compound(*target_text, p);
  for (const Query& q : p.queries)
    if (q.kind == kind && q.target) return *q.target;
  throw std::invalid_argument(std::string("no target given; pass --target or "
                                          "add a 'query ") +
                              query_name + "(...);' line");
}

// Left-justified columns, two spaces apart, trailing blanks stripped.
std::string render_columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size())
        line.append(width[c] - row[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

json verdict_json(const Verdict& v) {
  json j;
  j["coherent"] = v.coherent;
  if (!v.failure.empty()) j["failure"] = v.failure;
  j["levels"] = json::array();
  for (const LevelTrace& lvl : v.levels) {
    json l;
    l["indices"] = json::array();
    for (size_t i : lvl.indices) l["indices"].push_back(i + 1);
    l["cells"] = lvl.cells;
    l["weights"] = json::array();
    for (const Rat& w : lvl.lambda) l["weights"].push_back(to_string(w));
    l["zero_mass"] = json::array();
    for (size_t i : lvl.i0) l["zero_mass"].push_back(i + 1);
    j["levels"].push_back(std::move(l));
  }
  return j;
}

std::vector<const Constituent*> all_cells(const ConstituentSpace& space) {
  std::vector<const Constituent*> cells;
  for (const Constituent& c : space.cells) cells.push_back(&c);
  if (space.c0) cells.push_back(&*space.c0);
  return cells;
}

}  // namespace

RunResult run_check(const ProblemFile& p) {
  Instance inst = build_instance(p);
  std::map<uint32_t, Rat> M;
  RunResult out;
  json j;
  j["command"] = "check";
  if (fast_eligible(p, inst, &M)) {
    Verdict v = check_coherence_fast(*inst.space, M);
    std::ostringstream os;
    os << "path: signed previsions\n" << (v.coherent ? "coherent" : "incoherent");
    if (!v.failure.empty()) os << ": " << v.failure;
    os << '\n';
    uint32_t full = (uint32_t{1} << p.family.size()) - 1;
    const LevelTrace& lvl = v.levels.front();
    for (size_t i = 0; i < lvl.cells.size(); ++i)
      os << SignedSubset{full, static_cast<uint32_t>(lvl.cells[i])}.to_string()
         << " = " << to_string(lvl.lambda[i]) << '\n';
    out.text = os.str();
    j["path"] = "signed previsions";
    j.update(verdict_json(v));
    out.exit_code = v.coherent ? 0 : 1;
  } else {
    Verdict v = check_coherence(inst.assessment);
    out.text = "path: mixture recursion\n" + v.to_string() + "\n";
    j["path"] = "mixture recursion";
    j.update(verdict_json(v));
    out.exit_code = v.coherent ? 0 : 1;
  }
  out.json = j.dump(2) + "\n";
  return out;
}

RunResult run_bounds(const ProblemFile& p,
                     const std::optional<std::string>& target_text) {
  Instance inst = build_instance(p);
  CompoundRef target = resolve_target(p, target_text, Query::Kind::Bounds, "bounds");
  std::string target_name = compound_text(target, p);

  json j;
  j["command"] = "bounds";
  j["target"] = target_name;

  Verdict base = check_coherence(inst.assessment);
  if (!base.coherent) {
    RunResult out;
    out.text = base.to_string() + "\n";
    j.update(verdict_json(base));
    out.json = j.dump(2) + "\n";
    out.exit_code = 1;
    return out;
  }

  // The signed-cell route answers conjunction targets under full logical
  // independence; everything else goes through the mixture hull.
  bool independent = target.op == CompoundRef::Op::Conjunction &&
                     2 * p.family.size() <= 20;
  if (independent)
    for (const AssessmentLine& line : p.assessments)
      independent = independent &&
                    line.target.op == CompoundRef::Op::Conjunction;
  if (independent) {
    std::vector<Event> basics;
    for (const ConditionalEvent& ce : p.family) {
      basics.push_back(ce.consequent);
      basics.push_back(ce.antecedent);
    }
    independent = events_logically_independent(basics, inst.space->atoms,
                                               inst.space->constraints);
  }

  ExtensionBounds b;
  std::string path;
  if (independent) {
    std::map<uint32_t, Rat> assessed;
    for (const AssessmentLine& line : p.assessments)
      assessed.emplace(line.target.mask, line.value);
    b = extension_bounds_independent(p.family.size(), assessed, target.mask);
    path = "signed cells";
  } else {
    CRQ crq = crq_for(*inst.alg, target);
    if (target.op == CompoundRef::Op::Disjunction) {
      // Proper sub-disjunction symbols in the table expand over conjunction
      // previsions; the target's own symbol stays free.
      std::map<Symbol, Affine> expand;
      for (uint32_t s = 1; s < target.mask; ++s)
        if ((s & target.mask) == s)
          expand.emplace(Symbol::disj(s),
                         inst.alg->inclusion_exclusion(s).prevision);
      crq = crq.substituted(expand);
    }
    b = extension_bounds(inst.assessment, crq);
    path = "mixture hull";
  }

  std::ostringstream os;
  os << '[' << to_string(b.lower) << ", " << to_string(b.upper) << ']';
  if (b.point()) os << " (point)";
  os << "\npath: " << path << '\n';
  if (b.exact) {
    os << "certified: every point in the interval\n";
  } else {
    auto yn = [](bool v) { return v ? "yes" : "no"; };
    os << "certified: lower " << yn(b.lower_certified) << ", upper "
       << yn(b.upper_certified) << ", midpoint " << yn(b.midpoint_certified)
       << '\n';
  }

  RunResult out;
  out.text = os.str();
  j["lower"] = to_string(b.lower);
  j["upper"] = to_string(b.upper);
  j["point"] = b.point();
  j["path"] = path;
  j["exact"] = b.exact;
  j["lower_certified"] = b.lower_certified;
  j["upper_certified"] = b.upper_certified;
  j["midpoint_certified"] = b.midpoint_certified;
  out.json = j.dump(2) + "\n";
  return out;
}

RunResult run_table(const ProblemFile& p,
                    const std::optional<std::string>& target_text) {
  Instance inst = build_instance(p);
  CompoundRef target = resolve_target(p, target_text, Query::Kind::Table, "table");
  std::string target_name = compound_text(target, p);
  CRQ target_crq = crq_for(*inst.alg, target);

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"cell", "signs"};
  for (const std::string& name : p.ce_names) header.push_back(name);
  header.push_back(target_name);
  rows.push_back(header);

  json jrows = json::array();
  for (const Constituent* c : all_cells(*inst.space)) {
    std::vector<std::string> row;
    row.push_back(inst.space->cell_label(*c));
    std::string signs;
    for (Sign s : c->signs) signs += sign_char(s);
    row.push_back(signs);
    json cells = json::array();
    for (size_t i = 0; i < p.family.size(); ++i) {
      row.push_back(
          inst.alg->member(i).value_at(*c).substitute(inst.bindings).to_string());
      cells.push_back(row.back());
    }
    row.push_back(target_crq.value_at(*c).substitute(inst.bindings).to_string());
    json jr;
    jr["cell"] = row.front();
    jr["signs"] = signs;
    jr["members"] = std::move(cells);
    jr["target"] = row.back();
    jrows.push_back(std::move(jr));
    rows.push_back(std::move(row));
  }

  RunResult out;
  out.text = render_columns(rows);
  json j;
  j["command"] = "table";
  j["target"] = target_name;
  j["members"] = p.ce_names;
  j["rows"] = std::move(jrows);
  out.json = j.dump(2) + "\n";
  return out;
}

RunResult run_constituents(const ProblemFile& p) {
  Instance inst = build_instance(p);
  const char* word[] = {"true", "false", "void"};

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"cell"};
  for (const std::string& name : p.ce_names) header.push_back(name);
  rows.push_back(header);

  json jrows = json::array();
  for (const Constituent* c : all_cells(*inst.space)) {
    std::vector<std::string> row{inst.space->cell_label(*c)};
    json signs = json::array();
    for (Sign s : c->signs) {
      row.push_back(word[static_cast<int>(s)]);
      signs.push_back(row.back());
    }
    json jr;
    jr["cell"] = row.front();
    jr["signs"] = std::move(signs);
    jrows.push_back(std::move(jr));
    rows.push_back(std::move(row));
  }

  RunResult out;
  out.text = render_columns(rows);
  json j;
  j["command"] = "constituents";
  j["members"] = p.ce_names;
  j["rows"] = std::move(jrows);
  out.json = j.dump(2) + "\n";
  return out;
}

RunResult run_expand(const ProblemFile& p,
                     const std::optional<std::string>& target_text) {
  Instance inst = build_instance(p);
  CompoundRef target = resolve_target(p, target_text, Query::Kind::Expand, "expand");
  if (target.op != CompoundRef::Op::Disjunction ||
      std::popcount(target.mask) < 2)
    throw std::invalid_argument(
        "expand needs a disjunction of two or more members");
  std::string target_name = compound_text(target, p);
  Affine expansion = inst.alg->inclusion_exclusion(target.mask).prevision;

  RunResult out;
  out.text = "P(" + target_name + ") = " + expansion.to_string() + "\n";
  json j;
  j["command"] = "expand";
  j["target"] = target_name;
  j["prevision"] = expansion.to_string();
  out.json = j.dump(2) + "\n";
  return out;
}

RunResult run_sample(size_t n, uint64_t seed) {
  if (n < 1 || n > 6)
    throw std::invalid_argument("sample supports 1 to 6 conditionals");
  const long denom = 65536;
  std::mt19937_64 rng(seed);
  std::vector<long> cuts{0, denom};
  for (size_t i = 1; i < size_t{1} << n; ++i)
    cuts.push_back(static_cast<long>(rng() % (denom + 1)));
  std::sort(cuts.begin(), cuts.end());
  std::vector<Rat> V;
  for (size_t i = 1; i < cuts.size(); ++i)
    V.push_back(frac(cuts[i] - cuts[i - 1], denom));

  auto [M, weights] = assessment_from_simplex(V, n);

  std::vector<std::string> names;
  std::vector<ConditionalEvent> family;
  for (size_t i = 1; i <= n; ++i) {
    names.push_back("E" + std::to_string(i));
    names.push_back("H" + std::to_string(i));
  }
  for (size_t i = 0; i < n; ++i)
    family.push_back(
        {Event::atom(names[2 * i]), Event::atom(names[2 * i + 1])});
  auto space = enumerate_constituents(std::move(family), AtomSet(names),
                                      ConstraintSet());
  Verdict v = check_coherence_fast(*space, M);

  uint32_t full = (uint32_t{1} << n) - 1;
  std::ostringstream os;
  os << "sample n=" << n << " seed=" << seed << '\n';
  json jv = json::array();
  for (uint32_t mask = 0; mask <= full; ++mask) {
    std::string label = SignedSubset{full, mask}.to_string();
    os << "V " << label << " = " << to_string(weights[mask]) << '\n';
    json e;
    e["cell"] = label;
    e["weight"] = to_string(weights[mask]);
    jv.push_back(std::move(e));
  }
  std::vector<uint32_t> order;
  for (const auto& [mask, x] : M) order.push_back(mask);
  std::sort(order.begin(), order.end(), [](uint32_t a, uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  json ja = json::array();
  for (uint32_t mask : order) {
    std::string sym = Symbol::conj(mask).to_string();
    os << sym << " = " << to_string(M.at(mask)) << '\n';
    json e;
    e["target"] = sym;
    e["value"] = to_string(M.at(mask));
    ja.push_back(std::move(e));
  }
  os << "check: " << (v.coherent ? "coherent" : "incoherent") << '\n';

  RunResult out;
  out.text = os.str();
  json j;
  j["command"] = "sample";
  j["n"] = n;
  j["seed"] = seed;
  j["V"] = std::move(jv);
  j["assessment"] = std::move(ja);
  j["coherent"] = v.coherent;
  out.json = j.dump(2) + "\n";
  out.exit_code = v.coherent ? 0 : 1;
  return out;
}

}  // namespace cocond
