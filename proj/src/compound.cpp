#include "cocond/compound.hpp"

#include <bit>
#include <stdexcept>

namespace cocond {

namespace {

int popcount(uint32_t m) { return std::popcount(m); }

}  // namespace

const Affine& CRQ::value_at(const Constituent& c) const {
  if (c.id == 0) {
    if (!c0_value) throw std::logic_error("no all-void cell in this space");
    return *c0_value;
  }
  return values[static_cast<size_t>(c.id) - 1];
}

CRQ CRQ::substituted(const std::map<Symbol, Rat>& vals) const {
  CRQ r = *this;
  for (auto& v : r.values) v = v.substitute(vals);
  if (r.c0_value) r.c0_value = r.c0_value->substitute(vals);
  r.prevision = r.prevision.substitute(vals);
  return r;
}

CRQ CRQ::substituted(const std::map<Symbol, Affine>& vals) const {
  CRQ r = *this;
  for (auto& v : r.values) v = v.substitute(vals);
  if (r.c0_value) r.c0_value = r.c0_value->substitute(vals);
  r.prevision = r.prevision.substitute(vals);
  return r;
}

bool CRQ::constant_on_conditioning(Rat* out) const {
  std::optional<Rat> seen;
  auto consider = [&](const Constituent& c, const Affine& v) -> bool {
    if (!space->cell_implies(c, conditioning)) return true;
    if (!v.is_constant()) return false;
    if (!seen) {
      seen = v.constant();
      return true;
    }
    return v.constant() == *seen;
  };
  for (size_t k = 0; k < space->cells.size(); ++k)
    if (!consider(space->cells[k], values[k])) return false;
  if (space->c0 && !consider(*space->c0, *c0_value)) return false;
  if (!seen) return false;
  if (out) *out = *seen;
  return true;
}

std::string SignedSubset::to_string() const {
  std::string out = "c(";
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    uint32_t bit = uint32_t{1} << i;
    if (!(universe & bit)) continue;
    if (!first) out += ",";
    first = false;
    if (!(positives & bit)) out += "~";
    out += std::to_string(i + 1);
  }
  return out + ")";
}

FamilyAlgebra::FamilyAlgebra(std::shared_ptr<const ConstituentSpace> space)
    : space_(std::move(space)) {
  const auto& sp = *space_;
  member_zero_.resize(sp.n());
  member_one_.resize(sp.n());
  for (size_t i = 0; i < sp.n(); ++i) {
    const auto& ce = sp.family[i];
    member_zero_[i] =
        !satisfiable(ce.consequent && ce.antecedent, sp.atoms, sp.constraints);
    member_one_[i] = implies(ce.antecedent, ce.consequent, sp.atoms, sp.constraints);
  }
}

CRQ FamilyAlgebra::constant_crq(const Rat& c, Event conditioning) const {
  CRQ q;
  q.space = space_;
  q.conditioning = std::move(conditioning);
  q.values.assign(space_->cells.size(), Affine(c));
  if (space_->c0) q.c0_value = Affine(c);
  q.prevision = Affine(c);
  return q;
}

void FamilyAlgebra::fold_if_constant(CRQ& q) const {
  Rat c;
  if (!q.constant_on_conditioning(&c)) return;
  for (auto& v : q.values) v = Affine(c);
  if (q.c0_value) q.c0_value = Affine(c);
  q.prevision = Affine(c);
}

const CRQ& FamilyAlgebra::conjunction(uint32_t S) {
  if (auto it = conj_memo_.find(S); it != conj_memo_.end()) return it->second;
  CRQ q = build_conjunction(S);
  return conj_memo_.emplace(S, std::move(q)).first->second;
}

const CRQ& FamilyAlgebra::disjunction(uint32_t S) {
  if (auto it = disj_memo_.find(S); it != disj_memo_.end()) return it->second;
  CRQ q = build_disjunction(S);
  return disj_memo_.emplace(S, std::move(q)).first->second;
}

const CRQ& FamilyAlgebra::member(size_t i) {
  if (i >= space_->n()) throw std::invalid_argument("family index out of range");
  return conjunction(uint32_t{1} << i);
}

CRQ FamilyAlgebra::build_conjunction(uint32_t S) {
  if (S > full_mask()) throw std::invalid_argument("subset outside the family");
  if (S == 0) return constant_crq(1, Event::certain());

  Event cond = Event::impossible();
  for (size_t i = 0; i < space_->n(); ++i)
    if (S & (uint32_t{1} << i)) {
      cond = cond || space_->family[i].antecedent;
      if (member_zero_[i]) return constant_crq(0, cond);
    }

  uint32_t s_eff = S;
  for (size_t i = 0; i < space_->n(); ++i)
    if ((S & (uint32_t{1} << i)) && member_one_[i]) s_eff &= ~(uint32_t{1} << i);
  if (s_eff == 0) return constant_crq(1, cond);
  if (s_eff != S) return conjunction(s_eff);

  CRQ q;
  q.space = space_;
  q.conditioning = cond;
  q.values.resize(space_->cells.size());
  std::vector<size_t> own_prevision_cells;
  for (size_t k = 0; k < space_->cells.size(); ++k) {
    const auto& signs = space_->cells[k].signs;
    bool failed = false;
    uint32_t voids = 0;
    for (size_t i = 0; i < space_->n(); ++i) {
      if (!(s_eff & (uint32_t{1} << i))) continue;
      if (signs[i] == Sign::FT) failed = true;
      if (signs[i] == Sign::Void) voids |= uint32_t{1} << i;
    }
    if (failed)
      q.values[k] = Affine(0);
    else if (voids == s_eff)
      own_prevision_cells.push_back(k);  // outside the conditioning event
    else
      q.values[k] = conjunction(voids).prevision;
  }

  bool all_constant = true;
  std::optional<Rat> uniform;
  for (size_t k = 0; k < space_->cells.size(); ++k) {
    bool active = true;
    for (size_t j : own_prevision_cells)
      if (j == k) active = false;
    if (!active) continue;
    if (!q.values[k].is_constant()) {
      all_constant = false;
      break;
    }
    if (!uniform)
      uniform = q.values[k].constant();
    else if (*uniform != q.values[k].constant())
      all_constant = false;
    if (!all_constant) break;
  }

  if (all_constant && uniform)
    q.prevision = Affine(*uniform);
  else
    q.prevision = Affine(Symbol::conj(s_eff));
  for (size_t j : own_prevision_cells) q.values[j] = q.prevision;
  if (space_->c0) q.c0_value = q.prevision;
  return q;
}

CRQ FamilyAlgebra::build_disjunction(uint32_t S) {
  if (S > full_mask()) throw std::invalid_argument("subset outside the family");
  if (S == 0) return constant_crq(0, Event::certain());

  Event cond = Event::impossible();
  for (size_t i = 0; i < space_->n(); ++i)
    if (S & (uint32_t{1} << i)) {
      cond = cond || space_->family[i].antecedent;
      if (member_one_[i]) return constant_crq(1, cond);
    }

  uint32_t s_eff = S;
  for (size_t i = 0; i < space_->n(); ++i)
    if ((S & (uint32_t{1} << i)) && member_zero_[i]) s_eff &= ~(uint32_t{1} << i);
  if (s_eff == 0) return constant_crq(0, cond);
  if (s_eff != S) return disjunction(s_eff);
  // A one-member disjunction is the conditional itself; its prevision symbol
  // lives in the x namespace.
  if (popcount(s_eff) == 1) return conjunction(s_eff);

  CRQ q;
  q.space = space_;
  q.conditioning = cond;
  q.values.resize(space_->cells.size());
  std::vector<size_t> own_prevision_cells;
  for (size_t k = 0; k < space_->cells.size(); ++k) {
    const auto& signs = space_->cells[k].signs;
    bool succeeded = false;
    uint32_t voids = 0;
    for (size_t i = 0; i < space_->n(); ++i) {
      if (!(s_eff & (uint32_t{1} << i))) continue;
      if (signs[i] == Sign::TT) succeeded = true;
      if (signs[i] == Sign::Void) voids |= uint32_t{1} << i;
    }
    if (succeeded)
      q.values[k] = Affine(1);
    else if (voids == s_eff)
      own_prevision_cells.push_back(k);
    else
      q.values[k] = disjunction(voids).prevision;
  }

  bool all_constant = true;
  std::optional<Rat> uniform;
  for (size_t k = 0; k < space_->cells.size(); ++k) {
    bool active = true;
    for (size_t j : own_prevision_cells)
      if (j == k) active = false;
    if (!active) continue;
    if (!q.values[k].is_constant()) {
      all_constant = false;
      break;
    }
    if (!uniform)
      uniform = q.values[k].constant();
    else if (*uniform != q.values[k].constant())
      all_constant = false;
    if (!all_constant) break;
  }

  if (all_constant && uniform)
    q.prevision = Affine(*uniform);
  else
    q.prevision = Affine(Symbol::disj(s_eff));
  for (size_t j : own_prevision_cells) q.values[j] = q.prevision;
  if (space_->c0) q.c0_value = q.prevision;
  return q;
}

CRQ FamilyAlgebra::indicator(const ConditionalEvent& ce, const Symbol& sym) {
  const auto& sp = *space_;
  if (!satisfiable(ce.antecedent, sp.atoms, sp.constraints))
    throw std::invalid_argument("antecedent is impossible under the constraints");
  if (!satisfiable(ce.consequent && ce.antecedent, sp.atoms, sp.constraints))
    return constant_crq(0, ce.antecedent);
  if (implies(ce.antecedent, ce.consequent, sp.atoms, sp.constraints))
    return constant_crq(1, ce.antecedent);

  CRQ q;
  q.space = space_;
  q.conditioning = ce.antecedent;
  q.prevision = Affine(sym);
  q.values.resize(sp.cells.size());
  Event yes = ce.consequent && ce.antecedent;
  Event no = !ce.consequent && ce.antecedent;
  Event out = !ce.antecedent;
  auto classify = [&](const Constituent& c) -> Affine {
    if (sp.cell_implies(c, yes)) return Affine(1);
    if (sp.cell_implies(c, no)) return Affine(0);
    if (sp.cell_implies(c, out)) return q.prevision;
    throw std::invalid_argument("constituent " + sp.cell_label(c) +
                                " does not decide the conditional event");
  };
  for (size_t k = 0; k < sp.cells.size(); ++k) q.values[k] = classify(sp.cells[k]);
  if (sp.c0) q.c0_value = classify(*sp.c0);
  fold_if_constant(q);
  return q;
}

CRQ FamilyAlgebra::signed_conjunction(const SignedSubset& s) {
  return signed_conjunction(s.universe, s.positives);
}

CRQ FamilyAlgebra::signed_conjunction(uint32_t universe, uint32_t positives) {
  if (positives & ~universe)
    throw std::invalid_argument("positives must lie inside the universe");
  if (universe > full_mask())
    throw std::invalid_argument("universe outside the family");
  uint32_t negated = universe & ~positives;
  std::vector<std::pair<Rat, CRQ>> terms;
  uint32_t J = negated;
  while (true) {
    terms.emplace_back(popcount(J) % 2 == 0 ? 1 : -1, conjunction(positives | J));
    if (J == 0) break;
    J = (J - 1) & negated;
  }
  CRQ q = linear_combination(terms);
  Event cond = Event::impossible();
  for (size_t i = 0; i < space_->n(); ++i)
    if (universe & (uint32_t{1} << i)) cond = cond || space_->family[i].antecedent;
  q.conditioning = universe == 0 ? Event::certain() : cond;
  return q;
}

std::vector<std::pair<SignedSubset, CRQ>> FamilyAlgebra::conditional_constituents() {
  std::vector<std::pair<SignedSubset, CRQ>> out;
  for (uint32_t P = 0; P <= full_mask(); ++P) {
    CRQ q = signed_conjunction(full_mask(), P);
    bool zero = true;
    for (const auto& v : q.values)
      if (!v.is_zero()) {
        zero = false;
        break;
      }
    if (!zero) out.emplace_back(SignedSubset{full_mask(), P}, std::move(q));
  }
  return out;
}

CRQ FamilyAlgebra::inclusion_exclusion(uint32_t S) {
  if (S == 0) throw std::invalid_argument("empty subset");
  std::vector<std::pair<Rat, CRQ>> terms;
  uint32_t T = S;
  while (true) {
    terms.emplace_back(popcount(T) % 2 == 1 ? 1 : -1, conjunction(T));
    T = (T - 1) & S;
    if (T == 0) break;
  }
  CRQ q = linear_combination(terms);
  Event cond = Event::impossible();
  for (size_t i = 0; i < space_->n(); ++i)
    if (S & (uint32_t{1} << i)) cond = cond || space_->family[i].antecedent;
  q.conditioning = cond;
  return q;
}

Affine FamilyAlgebra::expand_disj_symbols(const Affine& a) {
  Affine out(a.constant());
  for (const auto& [sym, coef] : a.terms()) {
    if (sym.kind != Symbol::Kind::Disj) {
      out += coef * Affine(sym);
      continue;
    }
    out += coef * inclusion_exclusion(sym.subset).prevision;
  }
  return out;
}

CRQ FamilyAlgebra::expand_disj_symbols(const CRQ& q) {
  CRQ r = q;
  for (auto& v : r.values) v = expand_disj_symbols(v);
  if (r.c0_value) r.c0_value = expand_disj_symbols(*r.c0_value);
  r.prevision = expand_disj_symbols(r.prevision);
  return r;
}

CRQ FamilyAlgebra::quasi_conjunction(size_t i, size_t j, const Symbol& sym) {
  if (i >= space_->n() || j >= space_->n())
    throw std::invalid_argument("family index out of range");
  const auto& a = space_->family[i];
  const auto& b = space_->family[j];
  ConditionalEvent ce{
      (!a.antecedent || (a.consequent && a.antecedent)) &&
          (!b.antecedent || (b.consequent && b.antecedent)),
      a.antecedent || b.antecedent};
  return indicator(ce, sym);
}

CRQ negation(const CRQ& q) {
  CRQ r = q;
  for (auto& v : r.values) v = Affine(1) - v;
  if (r.c0_value) r.c0_value = Affine(1) - *r.c0_value;
  r.prevision = Affine(1) - r.prevision;
  return r;
}

CRQ linear_combination(const std::vector<std::pair<Rat, CRQ>>& terms) {
  if (terms.empty()) throw std::invalid_argument("empty combination");
  const auto& space = terms.front().second.space;
  for (const auto& [c, q] : terms)
    if (q.space != space)
      throw std::invalid_argument("terms live on different constituent spaces");

  CRQ out;
  out.space = space;
  out.conditioning = Event::impossible();
  out.values.assign(space->cells.size(), Affine(0));
  if (space->c0) out.c0_value = Affine(0);
  for (const auto& [c, q] : terms) {
    out.conditioning = out.conditioning || q.conditioning;
    for (size_t k = 0; k < out.values.size(); ++k) out.values[k] += c * q.values[k];
    if (out.c0_value) *out.c0_value += c * *q.c0_value;
    out.prevision += c * q.prevision;
  }
  return out;
}

bool equal_tables(const CRQ& a, const CRQ& b) {
  return a.space == b.space && a.values == b.values && a.c0_value == b.c0_value &&
         a.prevision == b.prevision;
}

bool equal_on_conditioning(const CRQ& a, const CRQ& b) {
  if (a.space != b.space) return false;
  Event u = a.conditioning || b.conditioning;
  for (size_t k = 0; k < a.values.size(); ++k)
    if (a.space->cell_implies(a.space->cells[k], u) && !(a.values[k] == b.values[k]))
      return false;
  if (a.space->c0 && a.space->cell_implies(*a.space->c0, u) &&
      !(a.c0_value == b.c0_value))
    return false;
  return true;
}

std::pair<CRQ, Rat> atoms_chain(const std::vector<Event>& partition,
                                const std::vector<Rat>& probs, const AtomSet& atoms,
                                const ConstraintSet& cs) {
  const size_t n = partition.size();
  if (n == 0) throw std::invalid_argument("empty partition");
  if (probs.size() != n)
    throw std::invalid_argument("need one probability per event");
  for (const Rat& p : probs)
    if (!in_unit_interval(p))
      throw std::invalid_argument("probability outside [0,1]");
  for (size_t i = 0; i < n; ++i) {
    if (!satisfiable(partition[i], atoms, cs))
      throw std::invalid_argument("event " + std::to_string(i + 1) +
                                  " is impossible under the constraints");
    for (size_t j = i + 1; j < n; ++j)
      if (satisfiable(partition[i] && partition[j], atoms, cs))
        throw std::invalid_argument("events " + std::to_string(i + 1) + " and " +
                                    std::to_string(j + 1) +
                                    " are not incompatible");
  }

  std::vector<ConditionalEvent> family;
  Event rest = Event::certain();
  for (size_t i = 0; i < n; ++i) {
    // When the remaining region is contained in the event, that link of the
    // chain is certain and only probability 1 is consistent with it.
    if (implies(rest, partition[i], atoms, cs) && probs[i] != 1)
      throw std::invalid_argument("event " + std::to_string(i + 1) +
                                  " is certain given the preceding ones; its "
                                  "probability must be 1");
    family.push_back({partition[i], rest});
    rest = rest && !partition[i];
  }
  auto space = enumerate_constituents(std::move(family), atoms, cs);
  FamilyAlgebra algebra(space);

  // The first antecedent is the certain event, so no all-void cell exists and
  // each pair conjunction below has fully numeric values after substitution.
  std::vector<Rat> cur(space->cells.size());
  for (size_t k = 0; k < space->cells.size(); ++k)
    cur[k] = space->cells[k].signs[0] == Sign::TT ? 1 : 0;

  Rat scale = 1;
  for (size_t j = 1; j < n; ++j) {
    std::map<Symbol, Rat> vals{{Symbol::conj(uint32_t{1} << j), probs[j]}};
    CRQ pair = algebra.conjunction((uint32_t{1} << 0) | (uint32_t{1} << j))
                   .substituted(vals);
    for (size_t k = 0; k < space->cells.size(); ++k) {
      if (!pair.values[k].is_constant())
        throw std::logic_error("chain conjunction did not reduce to a constant");
      cur[k] = scale * pair.values[k].constant();
    }
    scale *= probs[j];
  }

  Rat prevision = probs[0] * scale;
  CRQ out;
  out.space = space;
  out.conditioning = Event::certain();
  out.values.reserve(cur.size());
  for (const Rat& v : cur) out.values.emplace_back(v);
  out.prevision = Affine(prevision);
  return {std::move(out), prevision};
}

}  // namespace cocond
