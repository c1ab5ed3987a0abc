#pragma once

#include <vector>

#include "cocond/rational.hpp"

namespace cocond {

// Closed-form prevision interval. lower > upper never escapes these
// functions; inputs admitting no coherent extension raise instead.
struct BoundPair {
  Rat lower = 0;
  Rat upper = 0;

  bool operator==(const BoundPair&) const = default;
};

// Interval for the conjunction of two conditionals given their previsions.
BoundPair frechet2(const Rat& x1, const Rat& x2);

// Interval for the conjunction of n conditionals given all the singles.
BoundPair frechet_n(const std::vector<Rat>& xs);

// Interval for a conjunction given the previsions of two complementary
// blocks of its members.
BoundPair frechet_split(const Rat& xa, const Rat& xb);

// Interval for the quasi conjunction of two conditionals. The upper bound
// exceeds the plain conjunction's except at the corners.
BoundPair qc_bounds(const Rat& x1, const Rat& x2);

// Interval for the triple conjunction given all singles and pairs. The six
// inputs must admit a coherent completion; otherwise std::invalid_argument.
BoundPair bounds_n3(const Rat& x1, const Rat& x2, const Rat& x3,
                    const Rat& x12, const Rat& x13, const Rat& x23);

}  // namespace cocond
