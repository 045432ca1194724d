#include "charvar/polynomial.hpp"

#include <algorithm>

namespace charvar {

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& [code, exp] : factors_) d += exp;
  return d;
}

unsigned Monomial::degree_in(Variable v) const {
  for (const auto& [code, exp] : factors_)
    if (code == v.code()) return exp;
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  auto a = factors_.begin(), ae = factors_.end();
  auto b = other.factors_.begin(), be = other.factors_.end();
  while (a != ae && b != be) {
    if (a->first < b->first) {
      r.factors_.push_back(*a++);
    } else if (b->first < a->first) {
      r.factors_.push_back(*b++);
    } else {
      r.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  r.factors_.insert(r.factors_.end(), a, ae);
  r.factors_.insert(r.factors_.end(), b, be);
  return r;
}

bool Monomial::divisible_by(const Monomial& other) const {
  auto a = factors_.begin(), ae = factors_.end();
  for (const auto& [code, exp] : other.factors_) {
    while (a != ae && a->first < code) ++a;
    if (a == ae || a->first != code || a->second < exp) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!divisible_by(other)) throw DomainError("Monomial division is not exact");
  Monomial r;
  auto b = other.factors_.begin(), be = other.factors_.end();
  for (const auto& [code, exp] : factors_) {
    unsigned sub = 0;
    if (b != be && b->first == code) {
      sub = b->second;
      ++b;
    }
    if (exp > sub) r.factors_.emplace_back(code, exp - sub);
  }
  return r;
}

bool Monomial::graded_less(const Monomial& other) const {
  const unsigned da = degree(), db = other.degree();
  if (da != db) return da < db;
  // Same degree: lexicographic with smaller variable codes dominating, so
  // e.g. t1^2 ranks above t1*t2 which ranks above t2^2.
  auto a = factors_.begin(), ae = factors_.end();
  auto b = other.factors_.begin(), be = other.factors_.end();
  while (a != ae && b != be) {
    if (a->first != b->first) return a->first > b->first;
    if (a->second != b->second) return a->second < b->second;
    ++a;
    ++b;
  }
  return false;  // identical
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

unsigned Polynomial::degree_in(Variable v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(v));
  return d;
}

bool Polynomial::contains(Variable v) const {
  for (const auto& [m, c] : terms_)
    if (m.degree_in(v) > 0) return true;
  return false;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c.is_zero()) return Polynomial();
  Polynomial r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Polynomial Polynomial::operator/(const Rational& c) const {
  if (c.is_zero()) throw DomainError("Polynomial division by zero scalar");
  return *this * c.inverse();
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (n) {
    if (n & 1) result *= base;
    base = n > 1 ? base * base : base;
    n >>= 1;
  }
  return result;
}

Polynomial Polynomial::substitute(const std::map<std::uint32_t, Polynomial>& bindings) const {
  Polynomial result;
  for (const auto& [m, c] : terms_) {
    Polynomial term(c);
    for (const auto& [code, exp] : m.factors()) {
      auto it = bindings.find(code);
      if (it != bindings.end()) {
        term *= it->second.pow(exp);
      } else {
        term *= Polynomial(Variable::from_code(code)).pow(exp);
      }
    }
    result += term;
  }
  return result;
}

Rational Polynomial::evaluate(const std::map<std::uint32_t, Rational>& point) const {
  Rational result(0);
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (const auto& [code, exp] : m.factors()) {
      auto it = point.find(code);
      if (it == point.end())
        throw MissingBinding("evaluate: no value bound for " + Variable::from_code(code).str());
      term *= it->second.pow(exp);
    }
    result += term;
  }
  return result;
}

ComplexF Polynomial::evaluate_complex(const std::map<std::uint32_t, ComplexF>& point) const {
  if (terms_.empty()) return ComplexF();
  // Horner in the lowest-coded variable present; constant polynomials bottom out.
  std::uint32_t vcode = 0;
  bool found = false;
  for (const auto& [m, c] : terms_) {
    for (const auto& [code, exp] : m.factors()) {
      if (!found || code < vcode) {
        vcode = code;
        found = true;
      }
      break;  // factors are sorted; first is smallest in this monomial
    }
  }
  if (!found) return ComplexF(terms_.begin()->second.to_double());
  const Variable v = Variable::from_code(vcode);
  auto it = point.find(vcode);
  if (it == point.end())
    throw MissingBinding("evaluate_complex: no value bound for " + v.str());
  const ComplexF x = it->second;
  const unsigned top = degree_in(v);
  ComplexF acc = coefficient_of(v, top).evaluate_complex(point);
  for (unsigned k = top; k-- > 0;)
    acc = acc * x + coefficient_of(v, k).evaluate_complex(point);
  return acc;
}

Polynomial Polynomial::map_trace_indices(const std::map<int, int>& sigma) const {
  Polynomial result;
  for (const auto& [m, c] : terms_) {
    Monomial img;
    for (const auto& [code, exp] : m.factors()) {
      Variable v = Variable::from_code(code);
      if (v.is_trace_coordinate()) {
        auto it = sigma.find(v.trace_index());
        if (it != sigma.end()) v = Variable::t(it->second);
      }
      img = img * Monomial(v, exp);
    }
    result.add_term(img, c);
  }
  return result;
}

Polynomial Polynomial::derivative(Variable v) const {
  Polynomial result;
  for (const auto& [m, c] : terms_) {
    const unsigned e = m.degree_in(v);
    if (e == 0) continue;
    result.add_term(m / Monomial(v), c * Rational(static_cast<int>(e)));
  }
  return result;
}

Polynomial Polynomial::coefficient_of(Variable v, unsigned k) const {
  Polynomial result;
  const Monomial vk(v, k);
  for (const auto& [m, c] : terms_) {
    if (m.degree_in(v) != k) continue;
    result.add_term(k == 0 ? m : m / vk, c);
  }
  return result;
}

std::vector<Variable> Polynomial::variables() const {
  std::vector<std::uint32_t> codes;
  for (const auto& [m, c] : terms_)
    for (const auto& [code, exp] : m.factors()) codes.push_back(code);
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  std::vector<Variable> out;
  out.reserve(codes.size());
  for (std::uint32_t code : codes) out.push_back(Variable::from_code(code));
  return out;
}

}  // namespace charvar
