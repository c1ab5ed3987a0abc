#include "cocond/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace cocond {

namespace {

void require_unit(std::initializer_list<const Rat*> vals) {
  for (const Rat* v : vals)
    if (!in_unit_interval(*v))
      throw std::invalid_argument("previsions must lie in [0,1]");
}

}  // namespace

BoundPair frechet2(const Rat& x1, const Rat& x2) {
  require_unit({&x1, &x2});
  return {std::max<Rat>(x1 + x2 - 1, 0), std::min(x1, x2)};
}

BoundPair frechet_n(const std::vector<Rat>& xs) {
  if (xs.empty()) throw std::invalid_argument("at least one prevision required");
  Rat sum = 0;
  Rat low = 1;
  for (const Rat& x : xs) {
    require_unit({&x});
    sum += x;
    low = std::min(low, x);
  }
  return {std::max<Rat>(sum - static_cast<long>(xs.size()) + 1, 0), low};
}

BoundPair frechet_split(const Rat& xa, const Rat& xb) {
  require_unit({&xa, &xb});
  return {std::max<Rat>(xa + xb - 1, 0), std::min(xa, xb)};
}

BoundPair qc_bounds(const Rat& x1, const Rat& x2) {
  require_unit({&x1, &x2});
  Rat lower = std::max<Rat>(x1 + x2 - 1, 0);
  if (x1 == 1 && x2 == 1) return {lower, 1};
  return {lower, (x1 + x2 - 2 * x1 * x2) / (1 - x1 * x2)};
}

BoundPair bounds_n3(const Rat& x1, const Rat& x2, const Rat& x3,
                    const Rat& x12, const Rat& x13, const Rat& x23) {
  require_unit({&x1, &x2, &x3, &x12, &x13, &x23});
  Rat lower = std::max({Rat(0), Rat(x12 + x13 - x1), Rat(x12 + x23 - x2),
                        Rat(x13 + x23 - x3)});
  Rat upper = std::min({x12, x13, x23,
                        Rat(1 - x1 - x2 - x3 + x12 + x13 + x23)});
  if (lower > upper)
    throw std::invalid_argument(
        "the six previsions admit no coherent triple conjunction");
  return {lower, upper};
}

}  // namespace cocond
