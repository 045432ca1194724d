#include "charvar/poisson.hpp"

#include <string>

#include "charvar/char_ring.hpp"
#include "charvar/errors.hpp"
#include "charvar/reduce.hpp"

namespace charvar {
namespace {

const std::map<int, int>& negation_map() {
  static const std::map<int, int> sigma = {{1, -1}, {-1, 1}, {2, -2}, {-2, 2},
                                           {3, -3}, {-3, 3}, {4, -4}, {-4, 4}};
  return sigma;
}

// {t(4), t(5)} as printed.
const Polynomial& a45() {
  static const Polynomial a = Polynomial::parse(
      "t4*(t1*t-1 + t2*t-2 + t3*t-3 - t5 - 6)"
      " + t-4*(2*t1*t3 + 2*t-2*t-3 - 4*t-1*t2)"
      " + t5*t1*t-2 + 3*t-4^2 - 3*t-1*t-3 - 3*t2*t3 + 3*t1*t-2"
      " + t-1^2*t-2 + t1^2*t-3 + t2*t-3^2 + t1*t2^2 + t3*t-2^2"
      " + t-1*t3^2 + t-1^2*t2^2 - t1*t-1*t2*t3 - t-3*t-2*t-1*t2"
      " - t1*t2*t-2^2 - t-2*t-1*t1^2");
  return a;
}

// {t(-4), t(5)} as printed (tests confirm it equals the subscript negation
// of a45 with the overall sign flipped).
const Polynomial& am45() {
  static const Polynomial a = Polynomial::parse(
      "t-4*(t5 - t-1*t1 - t2*t-2 - t3*t-3 + 6)"
      " + t4*(4*t1*t-2 - 2*t-1*t-3 - 2*t2*t3)"
      " - t5*t-1*t2 - 3*t4^2 + 3*t1*t3 + 3*t-2*t-3 - 3*t-1*t2"
      " - t1^2*t2 - t-1^2*t3 - t-2*t3^2 - t-1*t-2^2 - t-3*t2^2"
      " - t1*t-3^2 - t1^2*t-2^2 + t-1*t1*t-2*t-3 + t3*t2*t1*t-2"
      " + t-1*t-2*t2^2 + t2*t1*t-1^2");
  return a;
}

}  // namespace

Polynomial normal_form(const Polynomial& f) {
  Polynomial g = f;
  if (g.contains(Variable::t(-5))) {
    std::map<std::uint32_t, Polynomial> bind;
    bind.emplace(Variable::t(-5).code(), poly_P() - T(5));
    g = g.substitute(bind);
  }
  const Variable t5 = Variable::t(5);
  while (g.degree_in(t5) >= 2) {
    const unsigned d = g.degree_in(t5);
    Polynomial next;
    for (unsigned k = 0; k <= d; ++k) {
      const Polynomial ck = g.coefficient_of(t5, k);
      if (ck.is_zero()) continue;
      if (k < 2)
        next += ck * T(5).pow(k);
      else
        next += ck * (poly_P() * T(5) - poly_Q()) * T(5).pow(k - 2);
    }
    g = next;
  }
  return g;
}

const std::map<std::pair<int, int>, Polynomial>& bracket_table() {
  static const std::map<std::pair<int, int>, Polynomial> table = [] {
    std::map<std::pair<int, int>, Polynomial> t;
    t.emplace(std::make_pair(4, -4), poly_P() - 2 * T(5));
    t.emplace(std::make_pair(4, 5), a45());
    t.emplace(std::make_pair(-4, 5), am45());
    return t;
  }();
  return table;
}

Polynomial bracket(const Polynomial& f, const Polynomial& g) {
  const Polynomial fn = normal_form(f);
  const Polynomial gn = normal_form(g);
  Polynomial acc;
  for (const auto& [pair_uv, value] : bracket_table()) {
    const Variable u = Variable::t(pair_uv.first);
    const Variable v = Variable::t(pair_uv.second);
    const Polynomial fu = fn.derivative(u);
    const Polynomial fv = fn.derivative(v);
    const Polynomial gu = gn.derivative(u);
    const Polynomial gv = gn.derivative(v);
    if ((fu.is_zero() || gv.is_zero()) && (fv.is_zero() || gu.is_zero()))
      continue;
    acc += (fu * gv - fv * gu) * value;
  }
  return normal_form(acc);
}

Polynomial jacobi_residual(const Polynomial& f, const Polynomial& g,
                           const Polynomial& h) {
  return normal_form(bracket(f, bracket(g, h)) + bracket(g, bracket(h, f)) +
                     bracket(h, bracket(f, g)));
}

const Polynomial& printed_bracket_with_P(int sign_index) {
  static const Polynomial plus =
      (poly_P() - 2 * T(5)) * Polynomial::parse("t4 - t1*t-2");
  static const Polynomial minus =
      (2 * T(5) - poly_P()) * Polynomial::parse("t-4 - t-1*t2");
  if (sign_index == 4) return plus;
  if (sign_index == -4) return minus;
  throw DomainError("printed_bracket_with_P: index must be +4 or -4");
}

const Polynomial& printed_bracket_with_Q(int sign_index) {
  static const Polynomial plus =
      (poly_P() - 2 * T(5)) *
      Polynomial::parse(
          "-6*t4 + 3*t-4^2 - 3*t-1*t-3 - 3*t2*t3 + 3*t1*t-2"
          " + t1*t-1*t4 + t2*t-2*t4 + t3*t-3*t4 + t-1^2*t-2 + t1^2*t-3"
          " + t2*t-3^2 + t1*t2^2 + t3*t-2^2 + t-1*t3^2 + t-1^2*t2^2"
          " - t1*t-1*t2*t3 - t-3*t-2*t-1*t2 - t1*t2*t-2^2 - t-2*t-1*t1^2"
          " + 2*t1*t3*t-4 + 2*t-2*t-3*t-4 - 4*t-1*t2*t-4");
  static const Polynomial minus =
      (2 * T(5) - poly_P()) *
      Polynomial::parse(
          "-6*t-4 + 3*t4^2 - 3*t1*t3 - 3*t-2*t-3 + 3*t-1*t2"
          " + t1*t-1*t-4 + t2*t-2*t-4 + t3*t-3*t-4 + t1^2*t2 + t-1^2*t3"
          " + t-2*t3^2 + t-1*t-2^2 + t-3*t2^2 + t1*t-3^2 + t1^2*t-2^2"
          " - t1*t-1*t-2*t-3 - t3*t-2*t1*t2 - t-1*t-2*t2^2 - t2*t1*t-1^2"
          " + 2*t-1*t-3*t4 + 2*t2*t3*t4 - 4*t1*t-2*t4");
  if (sign_index == 4) return plus;
  if (sign_index == -4) return minus;
  throw DomainError("printed_bracket_with_Q: index must be +4 or -4");
}

Polynomial t5_consistency_residual(int sign_index) {
  if (sign_index != 4 && sign_index != -4)
    throw DomainError("t5_consistency_residual: index must be +4 or -4");
  const Polynomial& lhs_factor = bracket_table().at({sign_index, 5});
  return normal_form((2 * T(5) - poly_P()) * lhs_factor -
                     (T(5) * printed_bracket_with_P(sign_index) -
                      printed_bracket_with_Q(sign_index)));
}

const BivectorField& poisson_bivector() {
  static const BivectorField field = [] {
    BivectorField f;
    f.c4_m4 = poly_P() - 2 * T(5);
    f.c4_5 = a45();
    // The printed field writes this coefficient as minus the base-subscript
    // negation of a45 (t(5) held fixed), which equals the printed
    // {t(-4), t(5)} expansion.
    f.cm4_5 = am45();
    return f;
  }();
  return field;
}

Polynomial comment1_residual() {
  const Polynomial r1 = reduce_trace_word(Word::parse("x1 X2 X1 X2 x1 x2"));
  const Polynomial r2 = reduce_trace_word(Word::parse("x1 X2"));
  const Polynomial r3 = reduce_trace_word(Word::parse("X2^2 x1^2 x2 X1"));
  const Polynomial r4 = reduce_trace_word(Word::parse("X2 x1 X2 x1 x2 X1"));
  return normal_form(r1 - r2 + r3 - r4 - a45());
}

}  // namespace charvar
