#include "cocond/coherence.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace cocond {

namespace {

// Assessed tables with all prevision symbols replaced by their assessed
// values, plus per-quantity containment of each constituent in the
// quantity's conditioning event.
struct NumericTables {
  std::shared_ptr<const ConstituentSpace> space;
  std::vector<std::vector<Rat>> value;    // [quantity][cell]
  std::vector<std::vector<bool>> inside;  // [quantity][cell]
  std::map<Symbol, Rat> bindings;
};

std::map<Symbol, Rat> collect_bindings(const Assessment& a) {
  std::map<Symbol, Rat> m;
  for (size_t i = 0; i < a.crqs.size(); ++i) {
    const Affine& p = a.crqs[i].prevision;
    if (p.terms().size() == 1 && p.constant() == 0 &&
        p.terms().begin()->second == 1)
      m.emplace(p.terms().begin()->first, a.values[i]);
  }
  return m;
}

Rat resolved(const Affine& v, const std::map<Symbol, Rat>& bindings) {
  Affine r = v.substitute(bindings);
  if (!r.is_constant())
    throw std::invalid_argument("missing assessment for symbol " +
                                r.terms().begin()->first.to_string());
  return r.constant();
}

NumericTables numeric_tables(const Assessment& a) {
  if (a.crqs.size() != a.values.size())
    throw std::invalid_argument("one prevision per assessed quantity required");
  NumericTables t;
  if (a.crqs.empty()) return t;
  t.space = a.crqs.front().space;
  for (const auto& q : a.crqs)
    if (q.space != t.space)
      throw std::invalid_argument(
          "assessed quantities live on different constituent spaces");

  t.bindings = collect_bindings(a);
  t.value.resize(a.crqs.size());
  t.inside.resize(a.crqs.size());
  for (size_t i = 0; i < a.crqs.size(); ++i) {
    const CRQ& q = a.crqs[i];
    Minterms cond = truth_set(q.conditioning, t.space->atoms);
    for (size_t k = 0; k < t.space->cells.size(); ++k) {
      t.value[i].push_back(resolved(q.values[k], t.bindings));
      bool in = t.space->cell_minterms[k].subset_of(cond);
      if (!in && (t.space->cell_minterms[k] & cond).any())
        throw std::logic_error("constituent does not decide a conditioning event");
      t.inside[i].push_back(in);
    }
  }
  return t;
}

// Constituents inside the union of the conditioning events of `J`.
std::vector<size_t> active_cells(const NumericTables& t,
                                 const std::vector<size_t>& J) {
  std::vector<size_t> cells;
  for (size_t k = 0; k < t.space->cells.size(); ++k)
    for (size_t i : J)
      if (t.inside[i][k]) {
        cells.push_back(k);
        break;
      }
  return cells;
}

LPProblem mixture_problem(const NumericTables& t, const std::vector<Rat>& mu,
                          const std::vector<size_t>& J,
                          const std::vector<size_t>& cells) {
  LPProblem p;
  for (size_t i : J) {
    std::vector<Rat> row;
    row.reserve(cells.size());
    for (size_t k : cells) row.push_back(t.value[i][k]);
    p.A.push_back(std::move(row));
    p.b.push_back(mu[i]);
  }
  p.A.emplace_back(cells.size(), Rat(1));
  p.b.emplace_back(1);
  return p;
}

// Members of J whose conditioning event carries zero total weight in every
// solution, one maximization each.
std::vector<size_t> zero_mass_indices(const NumericTables& t,
                                      const std::vector<Rat>& mu,
                                      const std::vector<size_t>& J,
                                      const std::vector<size_t>& cells) {
  std::vector<size_t> out;
  LPProblem p = mixture_problem(t, mu, J, cells);
  for (size_t i : J) {
    p.objective.assign(cells.size(), Rat(0));
    for (size_t idx = 0; idx < cells.size(); ++idx)
      if (t.inside[i][cells[idx]]) p.objective[idx] = 1;
    LPResult r = lp_solve(p);
    if (r.status == LPResult::Status::Optimal && r.value == 0) out.push_back(i);
  }
  return out;
}

std::string index_list(const std::vector<size_t>& v) {
  std::string out = "{";
  for (size_t i = 0; i < v.size(); ++i)
    out += (i ? "," : "") + std::to_string(v[i] + 1);
  return out + "}";
}

uint32_t full_mask_for(size_t n) {
  if (n == 0 || n > 20)
    throw std::invalid_argument("family size out of range");
  return (uint32_t{1} << n) - 1;
}

void require_full_assessment(const std::map<uint32_t, Rat>& M, uint32_t full) {
  for (uint32_t s = 1; s <= full; ++s)
    if (!M.count(s))
      throw std::invalid_argument(
          "assessment must cover every nonempty sub-conjunction");
}

}  // namespace

std::string Verdict::to_string() const {
  std::ostringstream os;
  os << (coherent ? "coherent" : "incoherent");
  if (!failure.empty()) os << ": " << failure;
  for (size_t l = 0; l < levels.size(); ++l) {
    const LevelTrace& lvl = levels[l];
    os << "\nlevel " << l << ": indices " << index_list(lvl.indices);
    if (!lvl.lambda.empty()) {
      os << "; weights (";
      for (size_t i = 0; i < lvl.lambda.size(); ++i)
        os << (i ? ", " : "") << cocond::to_string(lvl.lambda[i]);
      os << ") on cells (";
      for (size_t i = 0; i < lvl.cells.size(); ++i)
        os << (i ? ", " : "") << "C" << lvl.cells[i];
      os << ")";
    }
    os << "; zero-mass " << index_list(lvl.i0);
  }
  return os.str();
}

BuiltPoints build_points(const Assessment& a) {
  NumericTables t = numeric_tables(a);
  BuiltPoints out;
  out.bindings = t.bindings;
  if (a.crqs.empty()) return out;

  std::vector<size_t> all(a.crqs.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<size_t> cells = active_cells(t, all);

  out.points.reserve(cells.size());
  out.in_conditioning.resize(a.crqs.size());
  for (size_t idx = 0; idx < cells.size(); ++idx) {
    size_t k = cells[idx];
    PointQ q;
    q.cell_id = t.space->cells[k].id;
    for (size_t i = 0; i < a.crqs.size(); ++i) {
      q.coords.push_back(t.value[i][k]);
      if (t.inside[i][k]) out.in_conditioning[i].push_back(idx);
    }
    out.points.push_back(std::move(q));
  }
  return out;
}

LPResult solve_sigma(const BuiltPoints& pts, const std::vector<Rat>& mu) {
  if (pts.points.empty()) throw std::invalid_argument("no constituent points");
  LPProblem p;
  for (size_t i = 0; i < mu.size(); ++i) {
    std::vector<Rat> row;
    row.reserve(pts.points.size());
    for (const PointQ& q : pts.points) row.push_back(q.coords.at(i));
    p.A.push_back(std::move(row));
    p.b.push_back(mu[i]);
  }
  p.A.emplace_back(pts.points.size(), Rat(1));
  p.b.emplace_back(1);
  return lp_solve(p);
}

std::vector<size_t> compute_I0(const BuiltPoints& pts, const std::vector<Rat>& mu) {
  LPProblem p;
  for (size_t i = 0; i < mu.size(); ++i) {
    std::vector<Rat> row;
    for (const PointQ& q : pts.points) row.push_back(q.coords.at(i));
    p.A.push_back(std::move(row));
    p.b.push_back(mu[i]);
  }
  p.A.emplace_back(pts.points.size(), Rat(1));
  p.b.emplace_back(1);

  std::vector<size_t> out;
  for (size_t i = 0; i < mu.size(); ++i) {
    p.objective.assign(pts.points.size(), Rat(0));
    for (size_t idx : pts.in_conditioning.at(i)) p.objective[idx] = 1;
    LPResult r = lp_solve(p);
    if (r.status == LPResult::Status::Optimal && r.value == 0) out.push_back(i);
  }
  return out;
}

Verdict check_coherence(const Assessment& a) {
  Verdict v;
  if (a.crqs.empty()) {
    v.coherent = true;
    return v;
  }
  NumericTables t = numeric_tables(a);

  std::vector<size_t> J(a.crqs.size());
  for (size_t i = 0; i < J.size(); ++i) J[i] = i;
  while (!J.empty()) {
    std::vector<size_t> cells = active_cells(t, J);
    LevelTrace lvl;
    lvl.indices = J;
    LPResult r = lp_solve(mixture_problem(t, a.values, J, cells));
    if (!r.feasible()) {
      v.levels.push_back(std::move(lvl));
      v.coherent = false;
      v.failure = "no mixture of the constituent points reproduces the "
                  "assessment on subfamily " +
                  index_list(J);
      return v;
    }
    lvl.lambda = std::move(r.solution);
    for (size_t k : cells) lvl.cells.push_back(t.space->cells[k].id);
    lvl.i0 = zero_mass_indices(t, a.values, J, cells);
    J = lvl.i0;
    v.levels.push_back(std::move(lvl));
  }
  v.coherent = true;
  return v;
}

std::map<uint32_t, Rat> constituent_previsions(const std::map<uint32_t, Rat>& M,
                                               size_t n) {
  uint32_t full = full_mask_for(n);
  require_full_assessment(M, full);
  std::map<uint32_t, Rat> out;
  for (uint32_t p = 0; p <= full; ++p) {
    uint32_t free = full & ~p;
    Rat total = 0;
    uint32_t sub = free;
    while (true) {
      uint32_t s = p | sub;
      Rat x = s == 0 ? Rat(1) : M.at(s);
      total += std::popcount(sub) % 2 == 0 ? x : -x;
      if (sub == 0) break;
      sub = (sub - 1) & free;
    }
    out[p] = total;
  }
  return out;
}

Verdict check_coherence_fast(const ConstituentSpace& space,
                             const std::map<uint32_t, Rat>& M) {
  uint32_t full = full_mask_for(space.n());
  require_full_assessment(M, full);

  std::vector<Event> basics;
  for (const auto& ce : space.family) {
    basics.push_back(ce.consequent);
    basics.push_back(ce.antecedent);
  }
  if (!events_logically_independent(basics, space.atoms, space.constraints))
    throw std::invalid_argument(
        "consequents and antecedents are not logically independent; use the "
        "full decision");

  std::map<uint32_t, Rat> sp = constituent_previsions(M, space.n());
  Verdict v;
  LevelTrace lvl;
  for (size_t i = 0; i < space.n(); ++i) lvl.indices.push_back(i);
  for (uint32_t p = 0; p <= full; ++p) {
    lvl.cells.push_back(static_cast<int>(p));  // positive-part masks
    lvl.lambda.push_back(sp.at(p));
  }
  v.levels.push_back(std::move(lvl));
  for (uint32_t p = 0; p <= full; ++p)
    if (sp.at(p) < 0) {
      v.coherent = false;
      v.failure = SignedSubset{full, p}.to_string() +
                  " has negative prevision " + cocond::to_string(sp.at(p));
      return v;
    }
  v.coherent = true;
  return v;
}

std::pair<std::map<uint32_t, Rat>, std::vector<Rat>> assessment_from_simplex(
    const std::vector<Rat>& V, size_t n) {
  uint32_t full = full_mask_for(n);
  if (V.size() != size_t{1} << n)
    throw std::invalid_argument("need one weight per signed cell");
  Rat total = 0;
  for (const Rat& v : V) {
    if (v < 0) throw std::invalid_argument("weights must be nonnegative");
    total += v;
  }
  if (total != 1) throw std::invalid_argument("weights must sum to one");

  std::map<uint32_t, Rat> M;
  for (uint32_t s = 1; s <= full; ++s) {
    Rat x = 0;
    for (uint32_t p = 0; p <= full; ++p)
      if ((p & s) == s) x += V[p];
    M[s] = x;
  }
  return {std::move(M), V};
}

ExtensionBounds extension_bounds(const Assessment& a, const CRQ& target) {
  if (!a.crqs.empty() && target.space != a.crqs.front().space)
    throw std::invalid_argument("target lives on a different constituent space");
  if (!check_coherence(a).coherent)
    throw std::invalid_argument("the assessment is incoherent on its own family");

  NumericTables t = numeric_tables(a);
  if (!t.space) t.space = target.space;

  Minterms tcond = truth_set(target.conditioning, t.space->atoms);
  std::vector<size_t> cells;
  std::vector<Rat> tcoord;
  for (size_t k = 0; k < t.space->cells.size(); ++k) {
    bool in_target = t.space->cell_minterms[k].subset_of(tcond);
    bool in_assessed = false;
    for (size_t i = 0; i < a.crqs.size() && !in_assessed; ++i)
      in_assessed = t.inside[i][k];
    if (!in_target && !in_assessed) continue;
    if (!in_target)
      throw std::invalid_argument(
          "the target's conditioning must hold on every constituent inside "
          "the assessed conditionings");
    cells.push_back(k);
    tcoord.push_back(resolved(target.values[k], t.bindings));
  }
  if (cells.empty()) throw std::invalid_argument("no constituent points");

  LPProblem p;
  for (size_t i = 0; i < a.crqs.size(); ++i) {
    std::vector<Rat> row;
    for (size_t k : cells) row.push_back(t.value[i][k]);
    p.A.push_back(std::move(row));
    p.b.push_back(a.values[i]);
  }
  p.A.emplace_back(cells.size(), Rat(1));
  p.b.emplace_back(1);

  ExtensionBounds out;
  p.objective = tcoord;
  LPResult hi = lp_solve(p);
  for (auto& c : p.objective) c = -c;
  LPResult lo = lp_solve(p);
  if (hi.status != LPResult::Status::Optimal ||
      lo.status != LPResult::Status::Optimal)
    throw std::logic_error("mixture system lost feasibility");
  out.upper = hi.value;
  out.lower = -lo.value;

  auto certify = [&](const Rat& cand) {
    Assessment ext = a;
    ext.crqs.push_back(target);
    ext.values.push_back(cand);
    return check_coherence(ext).coherent;
  };
  out.lower_certified = certify(out.lower);
  out.upper_certified = out.point() ? out.lower_certified : certify(out.upper);
  Rat mid = (out.lower + out.upper) / 2;
  out.midpoint_certified = out.point() ? out.lower_certified : certify(mid);
  return out;
}

ExtensionBounds extension_bounds_independent(
    size_t n, const std::map<uint32_t, Rat>& assessed, uint32_t target) {
  uint32_t full = full_mask_for(n);
  if (target == 0 || target > full)
    throw std::invalid_argument("target subset outside the family");
  for (const auto& [s, x] : assessed)
    if (s == 0 || s > full)
      throw std::invalid_argument("assessed subset outside the family");

  LPProblem p;
  const size_t vars = size_t{1} << n;
  for (const auto& [s, x] : assessed) {
    std::vector<Rat> row(vars, Rat(0));
    for (uint32_t q = 0; q <= full; ++q)
      if ((q & s) == s) row[q] = 1;
    p.A.push_back(std::move(row));
    p.b.push_back(x);
  }
  p.A.emplace_back(vars, Rat(1));
  p.b.emplace_back(1);

  p.objective.assign(vars, Rat(0));
  for (uint32_t q = 0; q <= full; ++q)
    if ((q & target) == target) p.objective[q] = 1;
  LPResult hi = lp_solve(p);
  if (hi.status == LPResult::Status::Infeasible)
    throw std::invalid_argument("the assessment is incoherent on its own family");
  for (auto& c : p.objective) c = -c;
  LPResult lo = lp_solve(p);

  ExtensionBounds out;
  out.upper = hi.value;
  out.lower = -lo.value;
  out.exact = true;
  out.lower_certified = out.upper_certified = out.midpoint_certified = true;
  return out;
}

QhReport verify_qh_coherence(const std::shared_ptr<const ConstituentSpace>& space,
                             const std::map<uint32_t, Rat>& M) {
  uint32_t full = full_mask_for(space->n());
  require_full_assessment(M, full);
  FamilyAlgebra alg(space);
  std::map<Symbol, Rat> bind;
  for (uint32_t s = 1; s <= full; ++s) bind[Symbol::conj(s)] = M.at(s);

  QhReport report;
  auto run_cell = [&](const Constituent& c) {
    std::map<uint32_t, Rat> qh;
    for (uint32_t s = 1; s <= full; ++s)
      qh[s] = resolved(alg.conjunction(s).value_at(c), bind);
    bool ok = check_coherence_fast(*space, qh).coherent;
    report.per_cell.emplace_back(c.id, ok);
    report.all_coherent = report.all_coherent && ok;
  };
  for (const auto& c : space->cells) run_cell(c);
  if (space->c0) run_cell(*space->c0);
  return report;
}

}  // namespace cocond
