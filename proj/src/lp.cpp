#include "cocond/lp.hpp"

#include <stdexcept>

namespace cocond {

namespace {

// Dense tableau: one row per basic variable, each row holding the n_total
// variable coefficients followed by the right-hand side.
struct Tableau {
  std::vector<std::vector<Rat>> rows;
  std::vector<size_t> basis;  // basis[i] = variable owning row i

  void pivot(size_t r, size_t c) {
    Rat inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c];
      for (size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
    }
    basis[r] = c;
  }
};

// Maximizes c over the tableau's feasible region. Entering variable: the
// lowest-index column with a positive reduced cost; leaving variable: the
// minimum-ratio row, ties broken by the lowest basic variable index.
LPResult::Status optimize(Tableau& t, const std::vector<Rat>& c) {
  const size_t n = c.size();
  while (true) {
    size_t enter = n;
    for (size_t j = 0; j < n && enter == n; ++j) {
      Rat rc = c[j];
      for (size_t i = 0; i < t.rows.size(); ++i)
        rc -= c[t.basis[i]] * t.rows[i][j];
      if (rc > 0) enter = j;
    }
    if (enter == n) return LPResult::Status::Optimal;

    size_t leave = t.rows.size();
    Rat best = 0;
    for (size_t i = 0; i < t.rows.size(); ++i) {
      const Rat& a = t.rows[i][enter];
      if (a <= 0) continue;
      Rat ratio = t.rows[i].back() / a;
      if (leave == t.rows.size() || ratio < best ||
          (ratio == best && t.basis[i] < t.basis[leave]))
        best = ratio, leave = i;
    }
    if (leave == t.rows.size()) return LPResult::Status::Unbounded;
    t.pivot(leave, enter);
  }
}

}  // namespace

LPResult lp_solve(const LPProblem& problem) {
  const size_t m = problem.A.size();
  const size_t n = m == 0 ? problem.objective.size() : problem.A.front().size();
  if (problem.b.size() != m)
    throw std::invalid_argument("one right-hand side per row required");
  for (const auto& row : problem.A)
    if (row.size() != n) throw std::invalid_argument("ragged constraint matrix");
  if (!problem.objective.empty() && problem.objective.size() != n)
    throw std::invalid_argument("objective length does not match columns");

  // Phase one: artificial basis, minimize the artificials' total.
  Tableau t;
  t.rows.resize(m);
  t.basis.resize(m);
  for (size_t i = 0; i < m; ++i) {
    bool flip = problem.b[i] < 0;
    auto& row = t.rows[i];
    row.assign(n + m + 1, Rat(0));
    for (size_t j = 0; j < n; ++j) row[j] = flip ? -problem.A[i][j] : problem.A[i][j];
    row[n + i] = 1;
    row[n + m] = flip ? -problem.b[i] : problem.b[i];
    t.basis[i] = n + i;
  }
  std::vector<Rat> phase1(n + m, Rat(0));
  for (size_t j = 0; j < m; ++j) phase1[n + j] = -1;
  optimize(t, phase1);

  Rat infeas = 0;
  for (size_t i = 0; i < m; ++i)
    if (t.basis[i] >= n) infeas += t.rows[i].back();
  if (infeas != 0) return {LPResult::Status::Infeasible, 0, {}};

  // Drive leftover zero-level artificials out, dropping redundant rows.
  for (size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < n) {
      ++i;
      continue;
    }
    size_t c = n;
    for (size_t j = 0; j < n && c == n; ++j)
      if (t.rows[i][j] != 0) c = j;
    if (c < n) {
      t.pivot(i, c);
      ++i;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<ptrdiff_t>(i));
    }
  }
  for (auto& row : t.rows) {
    row.erase(row.begin() + static_cast<ptrdiff_t>(n),
              row.begin() + static_cast<ptrdiff_t>(n + m));
  }

  // Phase two over the original objective (all zeros when feasibility only).
  std::vector<Rat> c(n, Rat(0));
  for (size_t j = 0; j < problem.objective.size(); ++j) c[j] = problem.objective[j];
  LPResult::Status status = optimize(t, c);
  if (status == LPResult::Status::Unbounded)
    return {LPResult::Status::Unbounded, 0, {}};

  LPResult out;
  out.status = LPResult::Status::Optimal;
  out.solution.assign(n, Rat(0));
  for (size_t i = 0; i < t.rows.size(); ++i)
    out.solution[t.basis[i]] = t.rows[i].back();
  for (size_t j = 0; j < n; ++j) out.value += c[j] * out.solution[j];
  return out;
}

}  // namespace cocond
