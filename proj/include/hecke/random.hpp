#pragma once

// Seeded random inputs for the property checks and the verification suites.

#include "hecke/ring.hpp"
#include "hecke/rootsystem.hpp"

#include <random>

namespace hecke {

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  Rat rat() {
    int num = uniform(-9, 9);
    int den = uniform(1, 9);
    return Rat(num, den);
  }

  Rat nonzero_rat() {
    for (;;) {
      Rat r = rat();
      if (r != 0) return r;
    }
  }

  Weight weight(int rank, int radius) {
    // |.|_1-ball of the given radius
    for (;;) {
      Weight w(rank);
      for (auto& x : w) x = uniform(-radius, radius);
      if (norm1_w(w) <= radius) return w;
    }
  }

  Weight dominant_weight(int rank, int radius) {
    for (;;) {
      Weight w(rank);
      for (auto& x : w) x = uniform(0, radius);
      if (norm1_w(w) <= radius) return w;
    }
  }

  std::map<Weight, Laurent> sparse_function(const RootSystem& rs, int radius,
                                            int nterms) {
    std::map<Weight, Laurent> f;
    for (int i = 0; i < nterms; ++i)
      f[weight(rs.rank, radius)] = Laurent::constant(nonzero_rat());
    return f;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace hecke
