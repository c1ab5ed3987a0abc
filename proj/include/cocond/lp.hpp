#pragma once

#include <vector>

#include "cocond/rational.hpp"

namespace cocond {

// Equality-form program: maximize objective . lambda subject to
// A lambda = b, lambda >= 0. An empty objective means feasibility only.
struct LPProblem {
  std::vector<std::vector<Rat>> A;  // m rows of n coefficients
  std::vector<Rat> b;               // m right-hand sides
  std::vector<Rat> objective;       // n coefficients, or empty
};

struct LPResult {
  enum class Status { Infeasible, Optimal, Unbounded };

  Status status = Status::Infeasible;
  Rat value = 0;              // objective at the optimum
  std::vector<Rat> solution;  // one value per column when optimal

  bool feasible() const { return status != Status::Infeasible; }
};

// Exact simplex over rationals, phase one then phase two, with the
// least-index pivot rule so no cycling is possible.
LPResult lp_solve(const LPProblem& problem);

}  // namespace cocond
