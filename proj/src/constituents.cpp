#include "cocond/constituents.hpp"

#include <stdexcept>

namespace cocond {

char sign_char(Sign s) {
  switch (s) {
    case Sign::TT:
      return 'T';
    case Sign::FT:
      return 'F';
    case Sign::Void:
      return 'V';
  }
  return '?';
}

Event ConstituentSpace::conditioning_union() const {
  Event u = Event::impossible();
  for (const auto& ce : family) u = u || ce.antecedent;
  return u;
}

bool ConstituentSpace::cell_implies(const Constituent& c, const Event& e) const {
  const Minterms& cell =
      c.id == 0 ? c0_minterms : cell_minterms[static_cast<size_t>(c.id) - 1];
  return cell.subset_of(truth_set(e, atoms));
}

Event ConstituentSpace::cell_event(const Constituent& c) const {
  Event e = Event::certain();
  for (size_t i = 0; i < family.size(); ++i) {
    const auto& ce = family[i];
    switch (c.signs[i]) {
      case Sign::TT:
        e = e && (ce.consequent && ce.antecedent);
        break;
      case Sign::FT:
        e = e && (!ce.consequent && ce.antecedent);
        break;
      case Sign::Void:
        e = e && !ce.antecedent;
        break;
    }
  }
  return e;
}

std::string ConstituentSpace::cell_label(const Constituent& c) const {
  return "C" + std::to_string(c.id);
}

const Constituent* ConstituentSpace::find_by_signs(
    const std::vector<Sign>& signs) const {
  if (c0 && c0->signs == signs) return &*c0;
  for (const auto& c : cells)
    if (c.signs == signs) return &c;
  return nullptr;
}

std::shared_ptr<const ConstituentSpace> enumerate_constituents(
    std::vector<ConditionalEvent> family, AtomSet atoms,
    ConstraintSet constraints) {
  if (family.empty()) throw std::invalid_argument("empty family");

  auto space = std::make_shared<ConstituentSpace>();
  space->atoms = std::move(atoms);
  space->constraints = std::move(constraints);
  space->family = std::move(family);

  const Minterms ok = space->constraints.admissible(space->atoms);
  if (ok.none()) throw std::invalid_argument("constraints are unsatisfiable");

  const size_t n = space->n();
  std::vector<Minterms> tt(n), ft(n), vd(n);
  for (size_t i = 0; i < n; ++i) {
    const auto& ce = space->family[i];
    Minterms ant = truth_set(ce.antecedent, space->atoms);
    if ((ant & ok).none())
      throw std::invalid_argument("antecedent of conditional " +
                                  std::to_string(i + 1) +
                                  " is impossible under the constraints");
    Minterms cons = truth_set(ce.consequent, space->atoms);
    tt[i] = cons & ant & ok;
    ft[i] = (~cons) & ant & ok;
    vd[i] = (~ant) & ok;
  }

  // Ternary counter over sign vectors, most significant digit first, so the
  // visit order is already lexicographic with TT < FT < Void.
  std::vector<Sign> signs(n, Sign::TT);
  int next_id = 1;
  while (true) {
    Minterms cell = ok;
    for (size_t i = 0; i < n && cell.any(); ++i) {
      switch (signs[i]) {
        case Sign::TT:
          cell = cell & tt[i];
          break;
        case Sign::FT:
          cell = cell & ft[i];
          break;
        case Sign::Void:
          cell = cell & vd[i];
          break;
      }
    }
    bool all_void = true;
    for (Sign s : signs) all_void = all_void && s == Sign::Void;
    if (cell.any()) {
      Constituent c;
      c.signs = signs;
      for (uint64_t a = 0; a < cell.size(); ++a)
        if (cell.test(a)) {
          c.witness = a;
          break;
        }
      if (all_void) {
        c.id = 0;
        space->c0 = c;
        space->c0_minterms = cell;
      } else {
        c.id = next_id++;
        space->cells.push_back(c);
        space->cell_minterms.push_back(cell);
      }
    }
    // Increment the ternary counter from the last position.
    size_t pos = n;
    while (pos > 0) {
      --pos;
      if (signs[pos] != Sign::Void) {
        signs[pos] = static_cast<Sign>(static_cast<uint8_t>(signs[pos]) + 1);
        break;
      }
      signs[pos] = Sign::TT;
      if (pos == 0) return space;
    }
  }
}

}  // namespace cocond
