#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "charvar/complexf.hpp"
#include "charvar/rational.hpp"
#include "charvar/variable.hpp"

namespace charvar {

// A power product of variables: codes with positive exponents, sorted by code.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(Variable v, unsigned exp = 1) {
    if (exp) factors_.emplace_back(v.code(), exp);
  }

  bool is_unit() const { return factors_.empty(); }
  unsigned degree() const;
  unsigned degree_in(Variable v) const;
  const std::vector<std::pair<std::uint32_t, unsigned>>& factors() const { return factors_; }

  Monomial operator*(const Monomial& other) const;
  // Exact division; throws DomainError if other does not divide *this.
  Monomial operator/(const Monomial& other) const;
  bool divisible_by(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Graded lexicographic: higher total degree first, then lex on codes.
  bool graded_less(const Monomial& other) const;
  friend bool operator<(const Monomial& x, const Monomial& y) { return x.graded_less(y); }

 private:
  std::vector<std::pair<std::uint32_t, unsigned>> factors_;
};

// Sparse multivariate polynomial with rational coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int c) { add_term(Monomial(), Rational(c)); }           // NOLINT implicit
  Polynomial(const Rational& c) { add_term(Monomial(), c); }         // NOLINT implicit
  explicit Polynomial(Variable v) { add_term(Monomial(v), Rational(1)); }

  static Polynomial variable(Variable v) { return Polynomial(v); }
  static Polynomial constant(const Rational& c) { return Polynomial(c); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // The constant term (zero if absent).
  Rational constant_term() const;
  std::size_t term_count() const { return terms_.size(); }
  // Total degree; the zero polynomial reports -1.
  int total_degree() const;
  unsigned degree_in(Variable v) const;
  bool contains(Variable v) const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial operator*(const Rational& c) const;
  Polynomial operator/(const Rational& c) const;
  Polynomial pow(unsigned n) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // Substitute polynomials for variables; unparametrized variables persist.
  Polynomial substitute(const std::map<std::uint32_t, Polynomial>& bindings) const;
  // Evaluate fully to a rational; throws MissingBinding if a variable is unbound.
  Rational evaluate(const std::map<std::uint32_t, Rational>& point) const;
  // Floating evaluation with Horner accumulation per variable.
  ComplexF evaluate_complex(const std::map<std::uint32_t, ComplexF>& point) const;
  // Apply an index permutation to trace coordinates t(i) -> t(sigma(i)).
  // Variables other than trace coordinates are left fixed.
  Polynomial map_trace_indices(const std::map<int, int>& sigma) const;
  // Formal partial derivative.
  Polynomial derivative(Variable v) const;
  // Coefficient of v^k, as a polynomial in the remaining variables.
  Polynomial coefficient_of(Variable v, unsigned k) const;
  std::vector<Variable> variables() const;

  // Canonical text form; see parse() for the grammar.
  std::string str() const;
  static Polynomial parse(const std::string& text);

  // Graded-lex descending order so str() emits leading terms first.
  struct Desc {
    bool operator()(const Monomial& x, const Monomial& y) const { return y.graded_less(x); }
  };
  using TermMap = std::map<Monomial, Rational, Desc>;
  const TermMap& terms() const { return terms_; }

 private:
  TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }
inline Polynomial operator*(int c, const Polynomial& p) { return p * Rational(c); }
inline Polynomial operator+(int c, const Polynomial& p) { return Polynomial(c) + p; }
inline Polynomial operator-(int c, const Polynomial& p) { return Polynomial(c) - p; }

// Shorthand for the trace coordinate t(i) as a polynomial.
inline Polynomial T(int i) { return Polynomial(Variable::t(i)); }

}  // namespace charvar
