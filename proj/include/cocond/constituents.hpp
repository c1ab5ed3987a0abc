#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cocond/events.hpp"

namespace cocond {

// Outcome of one conditional event inside a constituent: consequent and
// antecedent both true, consequent false with antecedent true, or antecedent
// false.
enum class Sign : uint8_t { TT = 0, FT = 1, Void = 2 };

char sign_char(Sign s);  // 'T', 'F', 'V'

// One cell of the partition generated by a family of conditional events: a
// satisfiable combination of per-conditional signs. id 0 is reserved for the
// all-void cell.
struct Constituent {
  int id = 0;
  std::vector<Sign> signs;
  uint64_t witness = 0;  // one admissible assignment inside the cell
};

// The partition generated by a family of conditional events under declared
// constraints. Cells C1..Cm (every satisfiable sign combination except
// all-void) are ordered lexicographically by sign vector with TT < FT < Void;
// the all-void cell, when satisfiable, sits apart as c0.
class ConstituentSpace {
 public:
  AtomSet atoms;
  ConstraintSet constraints;
  std::vector<ConditionalEvent> family;

  std::vector<Constituent> cells;      // ids 1..m in order
  std::optional<Constituent> c0;       // id 0
  std::vector<Minterms> cell_minterms; // aligned with cells
  Minterms c0_minterms;

  size_t n() const { return family.size(); }
  size_t cell_count() const { return cells.size(); }

  // Union of the antecedents, true exactly on C1..Cm.
  Event conditioning_union() const;

  // Cell is inside antecedent i exactly when its i-th sign is not Void.
  bool cell_in_antecedent(const Constituent& c, size_t i) const {
    return c.signs[i] != Sign::Void;
  }

  // Whether every admissible assignment of the cell satisfies e.
  bool cell_implies(const Constituent& c, const Event& e) const;

  // The cell as an event: conjunction of per-conditional sign literals.
  Event cell_event(const Constituent& c) const;
  std::string cell_label(const Constituent& c) const;  // e.g. "C3"

  const Constituent* find_by_signs(const std::vector<Sign>& signs) const;
};

// Enumerates the constituents of `family` under `constraints`. Throws
// std::invalid_argument when the constraints are unsatisfiable or some
// antecedent is impossible under them (the message names the conditional).
std::shared_ptr<const ConstituentSpace> enumerate_constituents(
    std::vector<ConditionalEvent> family, AtomSet atoms, ConstraintSet constraints);

}  // namespace cocond
