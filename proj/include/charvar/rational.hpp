// Exact rational scalar backed by GMP. Always in lowest terms with positive
// denominator; canonical zero is 0/1. Immutable-by-convention value type.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "charvar/errors.hpp"

namespace charvar {

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}            // NOLINT: implicit for literals
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(long long n) { set_ll(n); }
  Rational(int num, int den) : Rational(static_cast<long long>(num), den) {}
  Rational(long long num, long long den) {
    if (den == 0) throw DomainError("Rational: zero denominator");
    set_ll(num);
    Rational d;
    d.set_ll(den);
    v_ /= d.v_;  // mpq division canonicalizes
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Parses "p" or "p/q" (optional leading -). Throws ParseError otherwise.
  static Rational parse(const std::string& text);

  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw DomainError("Rational: division by zero");
    return Rational(mpq_class(v_ / o.v_));
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

  Rational inverse() const {
    if (is_zero()) throw DomainError("Rational: inverse of zero");
    return Rational(mpq_class(1 / v_));
  }

  Rational pow(unsigned e) const {
    Rational acc(1), base = *this;
    while (e != 0) {
      if (e & 1u) acc *= base;
      base *= base;
      e >>= 1u;
    }
    return acc;
  }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  double to_double() const { return v_.get_d(); }

  // Canonical text: "p" for integers, "p/q" otherwise.
  std::string str() const { return v_.get_str(); }

 private:
  void set_ll(long long n) {
    if (n >= 0) {
      v_ = mpq_class(mpz_class(static_cast<unsigned long>(n)));
    } else {
      // careful with LLONG_MIN: negate in mpz space
      mpz_class m(static_cast<unsigned long>(-(n + 1)));
      m += 1;
      v_ = mpq_class(-m);
    }
  }

  mpq_class v_;
};

inline Rational operator*(int a, const Rational& b) { return Rational(a) * b; }

// True iff q = (p/r)^3 for a rational p/r; outputs the cube root when so.
bool rational_cube_root(const Rational& q, Rational* root);

}  // namespace charvar
