#pragma once

#include <cstdint>
#include <random>

#include "asf/root_system.hpp"
#include "asf/lie_elt.hpp"

namespace asf {

/// Deterministic RNG for randomized checks. Draws go through raw mt19937_64
/// output and modulo reduction only, so sequences are reproducible across
/// platforms and standard library versions (std::uniform_int_distribution is
/// not portable).
class TrialRng {
 public:
  explicit TrialRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  /// Uniform-ish in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) {
    require(n > 0, "TrialRng::below: n must be positive");
    return eng_() % n;
  }

  /// Uniform-ish in [lo, hi], inclusive.
  long long range(long long lo, long long hi) {
    require(lo <= hi, "TrialRng::range: empty range");
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool coin() { return (eng_() & 1) != 0; }

 private:
  std::mt19937_64 eng_;
};

/// splitmix64-style mix of a base seed and a trial index, so per-trial
/// streams are independent of trial execution order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Integer entries uniform in [-h_range, h_range] \ {0}, resampled until
/// every root evaluates to something nonzero.
inline CartanElt random_regular_h(const RootSystem& rs, TrialRng& rng, int h_range) {
  require(h_range >= 1, "h_range must be positive");
  for (;;) {
    CartanElt h;
    for (int i = 0; i < rs.rank(); ++i) {
      long long v = rng.range(1, h_range);
      h.simple_values.push_back(Rat(rng.coin() ? v : -v));
    }
    if (is_regular(h, rs)) return h;
  }
}

/// Nonzero rational with numerator in [1, num_bound] (sign random) and
/// denominator in [1, den_bound].
inline Rat random_rational(TrialRng& rng, int num_bound, int den_bound) {
  require(num_bound >= 1 && den_bound >= 1, "rational bounds must be positive");
  Rat r = Rat(Int(rng.range(1, num_bound))) / Rat(Int(rng.range(1, den_bound)));
  return rng.coin() ? r : -r;
}

/// Random element of n: each positive-root coefficient is zero with
/// probability 1/2, otherwise a bounded nonzero rational.
inline LieElt random_nilpotent(const RootSystem& rs, TrialRng& rng, int num_bound,
                               int den_bound) {
  LieElt x;
  for (int a = 0; a < rs.nu(); ++a)
    if (rng.coin()) x.add(a, random_rational(rng, num_bound, den_bound));
  return x;
}

/// Random element of the full algebra (for serialization round-trip tests).
inline LieElt random_lie_elt(const RootSystem& rs, TrialRng& rng, int num_bound,
                             int den_bound) {
  LieElt x;
  for (int a = 0; a < rs.num_roots(); ++a)
    if (rng.below(4) == 0) x.add(a, random_rational(rng, num_bound, den_bound));
  for (int i = 0; i < rs.rank(); ++i)
    if (rng.below(4) == 0) x.add(-1 - i, random_rational(rng, num_bound, den_bound));
  return x;
}

}  // namespace asf
