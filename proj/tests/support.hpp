#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cocond/rational.hpp"

namespace testsupport {

// Deterministic rational generator for randomized checks. Denominators stay
// small so LP pivots stay cheap.
class RatGen {
 public:
  explicit RatGen(uint64_t seed) : rng_(seed) {}

  cocond::Rat unit(int max_den = 64) {
    std::uniform_int_distribution<int> dd(1, max_den);
    int q = dd(rng_);
    std::uniform_int_distribution<int> nd(0, q);
    return cocond::frac(nd(rng_), q);
  }

  // Point in the probability simplex with `size` coordinates, every
  // coordinate positive.
  std::vector<cocond::Rat> simplex(size_t size, int max_weight = 64) {
    std::uniform_int_distribution<int> wd(1, max_weight);
    std::vector<int> w(size);
    long total = 0;
    for (auto& x : w) {
      x = wd(rng_);
      total += x;
    }
    std::vector<cocond::Rat> v(size);
    for (size_t i = 0; i < size; ++i) v[i] = cocond::frac(w[i], total);
    return v;
  }

  int integer(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng_);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testsupport
