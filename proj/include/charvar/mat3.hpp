#pragma once

#include <array>
#include <cmath>

#include "charvar/complexf.hpp"
#include "charvar/rational.hpp"
#include "charvar/word.hpp"

namespace charvar {

template <typename S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_unit_det(const Rational& d) { return d == Rational(1); }
};

template <>
struct ScalarTraits<ComplexF> {
  static constexpr double kTolerance = 1e-9;
  static ComplexF zero() { return ComplexF(); }
  static ComplexF one() { return ComplexF(1.0); }
  static bool is_unit_det(const ComplexF& d) {
    return (d - ComplexF(1.0)).abs() <= kTolerance;
  }
};

// 3x3 matrix over an exact rational or complex floating scalar, row-major.
template <typename S>
class Mat3 {
 public:
  Mat3() : e_{} {
    for (S& x : e_) x = ScalarTraits<S>::zero();
  }
  explicit Mat3(std::array<S, 9> entries) : e_(std::move(entries)) {}

  static Mat3 identity() {
    Mat3 m;
    m.at(0, 0) = m.at(1, 1) = m.at(2, 2) = ScalarTraits<S>::one();
    return m;
  }
  static Mat3 diag(const S& a, const S& b, const S& c) {
    Mat3 m;
    m.at(0, 0) = a;
    m.at(1, 1) = b;
    m.at(2, 2) = c;
    return m;
  }

  S& at(int i, int j) { return e_[static_cast<std::size_t>(3 * i + j)]; }
  const S& at(int i, int j) const { return e_[static_cast<std::size_t>(3 * i + j)]; }
  const std::array<S, 9>& entries() const { return e_; }

  Mat3 operator+(const Mat3& o) const {
    Mat3 r;
    for (int k = 0; k < 9; ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
  }
  Mat3 operator-(const Mat3& o) const {
    Mat3 r;
    for (int k = 0; k < 9; ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
  }
  Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        S acc = at(i, 0) * o.at(0, j);
        acc = acc + at(i, 1) * o.at(1, j);
        acc = acc + at(i, 2) * o.at(2, j);
        r.at(i, j) = acc;
      }
    return r;
  }
  Mat3 operator*(const S& c) const {
    Mat3 r;
    for (int k = 0; k < 9; ++k) r.e_[k] = e_[k] * c;
    return r;
  }

  friend bool operator==(const Mat3&, const Mat3&) = default;

 private:
  std::array<S, 9> e_;
};

template <typename S>
S trace(const Mat3<S>& m) {
  return m.at(0, 0) + m.at(1, 1) + m.at(2, 2);
}

// First-row cofactor expansion.
template <typename S>
S det(const Mat3<S>& m) {
  return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
         m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
         m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
}

// Transpose of the cofactor matrix; m * adjugate(m) = det(m) * I.
template <typename S>
Mat3<S> adjugate(const Mat3<S>& m) {
  Mat3<S> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      // Cofactor C(j,i) without sign bookkeeping: cyclic index choice bakes
      // the (-1)^{i+j} factor into the 2x2 determinant orientation.
      r.at(i, j) = m.at(r0, c0) * m.at(r1, c1) - m.at(r0, c1) * m.at(r1, c0);
    }
  return r;
}

// Inverse of a unimodular matrix via the adjugate.
template <typename S>
Mat3<S> inverse_sl(const Mat3<S>& m) {
  if (!ScalarTraits<S>::is_unit_det(det(m)))
    throw NotUnimodular("inverse_sl: determinant is not 1");
  return adjugate(m);
}

template <typename S>
Mat3<S> mat_pow(const Mat3<S>& m, int n) {
  Mat3<S> base = n < 0 ? inverse_sl(m) : m;
  unsigned k = n < 0 ? static_cast<unsigned>(-static_cast<long>(n)) : static_cast<unsigned>(n);
  Mat3<S> r = Mat3<S>::identity();
  while (k) {
    if (k & 1) r = r * base;
    if (k >>= 1) base = base * base;
  }
  return r;
}

// An SL3 representation of the rank-2 free group: images of x1 and x2.
template <typename S>
struct RepPair {
  Mat3<S> m1;
  Mat3<S> m2;
};

template <typename S>
Mat3<S> eval_word(const Word& w, const RepPair<S>& pair) {
  if (w.rank() > 2) throw RankUnsupported("eval_word: rank 2 representations only");
  Mat3<S> r = Mat3<S>::identity();
  for (const Letter& l : w.letters()) {
    const Mat3<S>& g = l.index == 1 ? pair.m1 : pair.m2;
    r = r * mat_pow(g, l.exponent);
  }
  return r;
}

template <typename S>
S trace_of(const Word& w, const RepPair<S>& pair) {
  return trace(eval_word(w, pair));
}

}  // namespace charvar
