#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cocond/events.hpp"
#include "cocond/rational.hpp"

namespace cocond {

// Reference to a compound of named family members: a conjunction or
// disjunction over the indices in `mask`, or the quasi conjunction of
// exactly two members. A singleton conjunction is the member itself.
struct CompoundRef {
  enum class Op { Conjunction, Disjunction, Quasi };
  Op op = Op::Conjunction;
  uint32_t mask = 0;  // bit i set = family index i

  auto operator<=>(const CompoundRef&) const = default;
};

struct AssessmentLine {
  CompoundRef target;
  Rat value;
};

struct Query {
  enum class Kind { Coherent, Bounds, Table, Expand };
  Kind kind = Kind::Coherent;
  std::optional<CompoundRef> target;  // absent for Coherent
};

// A parsed problem: atom declarations, constraints asserted true, the named
// conditional-event family, prevision assessments, and queries.
struct ProblemFile {
  std::vector<std::string> atom_names;
  std::vector<Event> constraints;
  std::vector<std::string> ce_names;  // aligned with family
  std::vector<ConditionalEvent> family;
  std::vector<AssessmentLine> assessments;
  std::vector<Query> queries;

  size_t member_index(const std::string& name) const;  // throws on unknown
};

struct ParseError : std::runtime_error {
  ParseError(int line, int col, const std::string& message);
  int line;
  int col;
};

// Statement grammar, one per line ending in ';', comments from '#':
//   atoms A, H, K;
//   constraint !(H & K);
//   ce X := A | H;
//   assess P(X ^ Y) = 1/6;
//   query coherent;            query bounds(X ^ Y);
//   query table(qc(X, Y));     query expand(X v Y);
// Events combine atoms with '!', '&', 'v' and parentheses. Compounds chain
// members with a single operator, '^' or 'v', or wrap two in qc( , ).
ProblemFile parse_problem(const std::string& text);

// One compound expression, e.g. a --target argument.
CompoundRef parse_compound(const std::string& text, const ProblemFile& p);

// Canonical rendering; parsing it back yields the same problem.
std::string pretty_print(const ProblemFile& p);
std::string compound_text(const CompoundRef& c, const ProblemFile& p);

}  // namespace cocond
