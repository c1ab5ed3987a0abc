#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cocond/affine.hpp"
#include "cocond/constituents.hpp"

namespace cocond {

// Conditional random quantity over a fixed constituent space. Holds one value
// per constituent (plus the all-void cell when it exists) and the prevision
// expression. Values follow the extended convention: on any constituent
// outside the conditioning event the stored value is the prevision itself.
struct CRQ {
  std::shared_ptr<const ConstituentSpace> space;
  Event conditioning;
  std::vector<Affine> values;       // aligned with space->cells
  std::optional<Affine> c0_value;   // present iff space->c0
  Affine prevision;

  const Affine& value_at(const Constituent& c) const;

  CRQ substituted(const std::map<Symbol, Rat>& vals) const;
  CRQ substituted(const std::map<Symbol, Affine>& vals) const;

  // True when every constituent inside the conditioning event carries the
  // same constant; that constant then coherently forces the prevision.
  bool constant_on_conditioning(Rat* out = nullptr) const;
};

// A conjunction with a chosen orientation per index: indices in `positives`
// enter plainly, the rest of `universe` enter negated.
struct SignedSubset {
  uint32_t universe = 0;
  uint32_t positives = 0;  // subset of universe

  std::string to_string() const;  // e.g. "c(1,~2,3)"
  auto operator<=>(const SignedSubset&) const = default;
};

// Builder for compound conditionals over one family. Construction is
// memoized per subset; conjunction and disjunction previsions of degenerate
// members fold eagerly (impossible consequent-and-antecedent gives the
// constant 0, antecedent inside consequent gives the constant 1), and any
// compound whose restriction to its conditioning event is a constant folds
// to that constant, prevision included.
class FamilyAlgebra {
 public:
  explicit FamilyAlgebra(std::shared_ptr<const ConstituentSpace> space);

  const std::shared_ptr<const ConstituentSpace>& space() const { return space_; }
  uint32_t full_mask() const { return (uint32_t{1} << space_->n()) - 1; }

  // Conjunction of the sub-family S (bit i-1 = family index i). S = 0 gives
  // the constant 1. Values are 1 where every member holds, 0 where some
  // member fails, and the prevision of the void sub-family elsewhere.
  const CRQ& conjunction(uint32_t S);

  // Dual construction; prevision symbols live in the y namespace.
  const CRQ& disjunction(uint32_t S);

  // Indicator of one family member (conjunction of the singleton).
  const CRQ& member(size_t i);

  // Indicator of an arbitrary conditional event, using `sym` on the cells
  // outside the antecedent. Every constituent must decide the event; a cell
  // split by it raises std::invalid_argument.
  CRQ indicator(const ConditionalEvent& ce, const Symbol& sym);

  // Conjunction with members outside `positives` negated, expanded as the
  // alternating sum of plain conjunctions so values stay affine in plain
  // x symbols.
  CRQ signed_conjunction(const SignedSubset& s);
  CRQ signed_conjunction(uint32_t universe, uint32_t positives);

  // All 2^n signed conjunctions over the full family, skipping those that
  // are identically 0 on the conditioning event under the constraints.
  std::vector<std::pair<SignedSubset, CRQ>> conditional_constituents();

  // Alternating inclusion-exclusion sum over the nonempty sub-conjunctions
  // of S. Equals disjunction(S) once y symbols are expanded.
  CRQ inclusion_exclusion(uint32_t S);

  // Substitutes every y symbol by its inclusion-exclusion expansion over
  // x symbols.
  Affine expand_disj_symbols(const Affine& a);
  CRQ expand_disj_symbols(const CRQ& q);

  // Conjunction-of-hedged-members indicator on the union of the two
  // antecedents, with prevision symbol `sym`.
  CRQ quasi_conjunction(size_t i, size_t j, const Symbol& sym);

 private:
  CRQ build_conjunction(uint32_t S);
  CRQ build_disjunction(uint32_t S);
  CRQ constant_crq(const Rat& c, Event conditioning) const;
  void fold_if_constant(CRQ& q) const;

  std::shared_ptr<const ConstituentSpace> space_;
  std::map<uint32_t, CRQ> conj_memo_, disj_memo_;
  std::vector<bool> member_zero_, member_one_;  // per family index
};

// 1 - X, same conditioning.
CRQ negation(const CRQ& q);

// Exact pointwise combination; all terms must share one constituent space.
// The conditioning defaults to the union of the terms' conditionings.
CRQ linear_combination(const std::vector<std::pair<Rat, CRQ>>& terms);

// Identical value tables (every cell and the prevision).
bool equal_tables(const CRQ& a, const CRQ& b);

// Equal on every constituent inside either conditioning event; previsions may
// differ symbolically (coherence forces them equal).
bool equal_on_conditioning(const CRQ& a, const CRQ& b);

// Conjunction of the chain H1|certain, H2|!H1, H3|(!H1 & !H2), ... for
// pairwise incompatible events, with the given pointwise probabilities.
// Returns the fully numeric CRQ and its prevision (the product).
std::pair<CRQ, Rat> atoms_chain(const std::vector<Event>& partition,
                                const std::vector<Rat>& probs,
                                const AtomSet& atoms, const ConstraintSet& cs);

}  // namespace cocond
