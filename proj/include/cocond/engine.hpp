#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cocond/problem.hpp"

namespace cocond {

// Outcome of one CLI command: the text report, the same data as a JSON
// document, and the process exit code (0 coherent or success, 1 incoherent,
// 2 is reserved for input errors and reached by throwing).
struct RunResult {
  std::string text;
  std::string json;
  int exit_code = 0;
};

// Decides coherence of the file's assessment. Dispatches to the signed
// prevision test when the file assesses every sub-conjunction of a logically
// independent family, otherwise to the mixture recursion.
RunResult run_check(const ProblemFile& p);

// Coherent prevision interval for one more compound. The target comes from
// `target_text` when given, else from the file's first bounds query.
RunResult run_bounds(const ProblemFile& p,
                     const std::optional<std::string>& target_text);

// Value table of the target compound: one row per constituent with the sign
// vector, every member's indicator and the target. Assessed previsions are
// substituted; the rest stay symbolic.
RunResult run_table(const ProblemFile& p,
                    const std::optional<std::string>& target_text);

// Lists the constituents generated by the family under the constraints.
RunResult run_constituents(const ProblemFile& p);

// Prints the inclusion-exclusion expansion of a disjunction's prevision.
RunResult run_expand(const ProblemFile& p,
                     const std::optional<std::string>& target_text);

// Draws a rational point of the simplex over the 2^n signed cells (weights
// with denominator 2^16, seeded), prints the induced assessment on all
// sub-conjunctions of a fresh independent family and re-checks it.
RunResult run_sample(size_t n, uint64_t seed);

}  // namespace cocond
