#pragma once

#include <cstdint>

#include "charvar/mat3.hpp"

namespace charvar {

// Deterministic 64-bit generator (splitmix64). Fixed algorithm so sampled
// matrices are bit-identical across runs and platforms for a given seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-enough integer in [lo, hi]; bias is irrelevant for sampling.
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

// Small random rational: numerator in [-9,9] \ {0}, denominator in [1,9].
Rational small_rational(SplitMix64& rng);

// Elementary transvection E_{ij}(q): identity plus q in off-diagonal (i,j).
Mat3<Rational> transvection(int i, int j, const Rational& q);

// A random product of n_factors transvections; det = 1 exactly.
Mat3<Rational> sample_sl3q_matrix(SplitMix64& rng, int n_factors);

// A deterministic pair of SL(3,Q) matrices for a seed. n_factors >= 1.
RepPair<Rational> sample_sl3q(std::uint64_t seed, int n_factors = 6);

// Integer-entry variant: transvection parameters are nonzero integers in
// [-4, 4], so the pair lies in SL(3,Z) and every trace monomial evaluates to
// an integer.  Used where downstream elimination benefits from staying
// fraction-free.
RepPair<Rational> sample_sl3z(std::uint64_t seed, int n_factors = 6);

}  // namespace charvar
