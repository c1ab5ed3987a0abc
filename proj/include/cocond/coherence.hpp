#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cocond/compound.hpp"
#include "cocond/lp.hpp"

namespace cocond {

// A prevision assessment: one exact rational per assessed quantity. All
// quantities must live on one constituent space.
struct Assessment {
  std::vector<CRQ> crqs;
  std::vector<Rat> values;
};

// Numeric coordinates of one constituent: the value each assessed quantity
// takes when that constituent is true.
struct PointQ {
  int cell_id = 0;
  std::vector<Rat> coords;
};

// The mixture system data for an assessment: one point per constituent
// inside the union of the conditioning events, plus per-quantity lists of
// the points inside that quantity's own conditioning event.
struct BuiltPoints {
  std::vector<PointQ> points;
  std::vector<std::vector<size_t>> in_conditioning;  // indices into points
  std::map<Symbol, Rat> bindings;                    // symbol values used
};

// One level of the zero-mass recursion: which assessed quantities were
// active, the mixture weights found (aligned with `cells`), and the indices
// whose conditioning event cannot carry positive mass.
struct LevelTrace {
  std::vector<size_t> indices;
  std::vector<int> cells;
  std::vector<Rat> lambda;
  std::vector<size_t> i0;
};

struct Verdict {
  bool coherent = false;
  std::vector<LevelTrace> levels;
  std::string failure;  // empty when coherent

  std::string to_string() const;
};

// Interval of prevision values for one more quantity given an assessment.
// `exact` marks intervals whose every point is known coherent (the
// independence route); otherwise the interval is hull-derived and only the
// endpoints and midpoint carry individual certificates.
struct ExtensionBounds {
  Rat lower = 0;
  Rat upper = 0;
  bool exact = false;
  bool lower_certified = false;
  bool upper_certified = false;
  bool midpoint_certified = false;

  bool point() const { return lower == upper; }
};

// Substitutes assessed previsions into every table and collects the numeric
// constituent points. Throws when a table symbol has no assessed value.
BuiltPoints build_points(const Assessment& a);

// Feasibility of the mixture system: M is a convex combination of the
// points, weights nonnegative and summing to one.
LPResult solve_sigma(const BuiltPoints& pts, const std::vector<Rat>& mu);

// Indices whose conditioning event carries zero mass in every solution of
// the mixture system, found by one exact maximization per index.
std::vector<size_t> compute_I0(const BuiltPoints& pts, const std::vector<Rat>& mu);

// Full decision: mixture solvability plus recursion on the zero-mass
// subfamily until it is empty.
Verdict check_coherence(const Assessment& a);

// Decision by signed previsions, valid when the consequents and antecedents
// of the family are logically independent and M assesses every nonempty
// sub-conjunction (keys are index subsets, bit i-1 for family index i).
// Coherent exactly when every signed prevision is nonnegative.
Verdict check_coherence_fast(const ConstituentSpace& space,
                             const std::map<uint32_t, Rat>& M);

// Signed previsions from plain conjunction previsions by alternating sums;
// the outputs always sum to one. Keys of the result are positive-part masks.
std::map<uint32_t, Rat> constituent_previsions(const std::map<uint32_t, Rat>& M,
                                               size_t n);

// Plain conjunction previsions induced by a point of the simplex over the
// 2^n signed cells (V[p] is the weight of positive-part mask p). Returns
// the subset assessment together with V itself; the pair is always coherent
// for logically independent families.
std::pair<std::map<uint32_t, Rat>, std::vector<Rat>> assessment_from_simplex(
    const std::vector<Rat>& V, size_t n);

// Coherent prevision interval for `target` given a coherent assessment.
// The target's conditioning must hold on every constituent the mixture
// system uses, so its own prevision never appears among the coordinates.
ExtensionBounds extension_bounds(const Assessment& a, const CRQ& target);

// Same question under logical independence via the signed-cell system:
// assessed maps subset masks to previsions (any collection of subsets);
// returns the exact coherent interval for the target subset's prevision.
ExtensionBounds extension_bounds_independent(size_t n,
                                             const std::map<uint32_t, Rat>& assessed,
                                             uint32_t target);

// Checks that the value vector of every constituent, read as an assessment
// on the full conjunction family, is itself coherent.
struct QhReport {
  std::vector<std::pair<int, bool>> per_cell;  // cell id, coherent
  bool all_coherent = true;
};
QhReport verify_qh_coherence(const std::shared_ptr<const ConstituentSpace>& space,
                             const std::map<uint32_t, Rat>& M);

}  // namespace cocond
