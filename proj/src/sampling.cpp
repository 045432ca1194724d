#include "charvar/sampling.hpp"

namespace charvar {

Rational small_rational(SplitMix64& rng) {
  int num = rng.uniform(-9, 8);
  if (num >= 0) ++num;  // skip zero
  const int den = rng.uniform(1, 9);
  return Rational(num, den);
}

Mat3<Rational> transvection(int i, int j, const Rational& q) {
  if (i == j || i < 0 || i > 2 || j < 0 || j > 2)
    throw DomainError("transvection: off-diagonal position required");
  Mat3<Rational> m = Mat3<Rational>::identity();
  m.at(i, j) = q;
  return m;
}

Mat3<Rational> sample_sl3q_matrix(SplitMix64& rng, int n_factors) {
  if (n_factors < 1) throw DomainError("sample_sl3q: n_factors must be >= 1");
  Mat3<Rational> m = Mat3<Rational>::identity();
  for (int k = 0; k < n_factors; ++k) {
    const int i = rng.uniform(0, 2);
    int j = rng.uniform(0, 1);
    if (j >= i) ++j;  // any of the two columns other than i
    m = m * transvection(i, j, small_rational(rng));
  }
  return m;
}

RepPair<Rational> sample_sl3q(std::uint64_t seed, int n_factors) {
  SplitMix64 rng(seed);
  RepPair<Rational> pair;
  pair.m1 = sample_sl3q_matrix(rng, n_factors);
  pair.m2 = sample_sl3q_matrix(rng, n_factors);
  return pair;
}

namespace {

Mat3<Rational> sample_sl3z_matrix(SplitMix64& rng, int n_factors) {
  if (n_factors < 1) throw DomainError("sample_sl3z: n_factors must be >= 1");
  Mat3<Rational> m = Mat3<Rational>::identity();
  for (int k = 0; k < n_factors; ++k) {
    const int i = rng.uniform(0, 2);
    int j = rng.uniform(0, 1);
    if (j >= i) ++j;
    int q = rng.uniform(-4, 3);
    if (q >= 0) ++q;  // skip zero
    m = m * transvection(i, j, Rational(q));
  }
  return m;
}

}  // namespace

RepPair<Rational> sample_sl3z(std::uint64_t seed, int n_factors) {
  SplitMix64 rng(seed);
  RepPair<Rational> pair;
  pair.m1 = sample_sl3z_matrix(rng, n_factors);
  pair.m2 = sample_sl3z_matrix(rng, n_factors);
  return pair;
}

}  // namespace charvar
