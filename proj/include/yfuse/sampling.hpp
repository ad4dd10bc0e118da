#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "yfuse/rational.hpp"

namespace yfuse {

inline constexpr std::uint64_t kDefaultSeed = 20240607;

/// Deterministic pseudorandom rational sample points p/q with
/// |p| <= 97 and 1 <= q <= 9, drawn from a seeded mt19937_64.
class SampleSequence {
 public:
  explicit SampleSequence(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

  Rational next() {
    const long p = static_cast<long>(rng_() % 195) - 97;
    const long q = static_cast<long>(rng_() % 9) + 1;
    return Rational(p, q);
  }

  /// A k-tuple accepted by the predicate (used to step around poles).
  std::vector<Rational> next_tuple(int k, const std::function<bool(const std::vector<Rational>&)>& admissible) {
    for (;;) {
      std::vector<Rational> t;
      for (int i = 0; i < k; ++i) t.push_back(next());
      if (admissible(t)) return t;
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace yfuse
