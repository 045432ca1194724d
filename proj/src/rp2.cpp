#include "charvar/rp2.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <string>

#include "charvar/polynomial.hpp"
#include "charvar/variable.hpp"

namespace charvar {

namespace {

// Characteristic cubic u^3 - ti u^2 + tmi u - 1 and its derivative,
// evaluated by Horner's scheme.
double cubic_value(double ti, double tmi, double u) {
  return ((u - ti) * u + tmi) * u - 1.0;
}

double cubic_slope(double ti, double tmi, double u) {
  return (3.0 * u - 2.0 * ti) * u + tmi;
}

// One root inside [lo, hi], where the cubic changes sign across the
// interval.  Newton steps are taken whenever they stay inside the current
// bracket; otherwise the step falls back to bisection, so the iteration
// cannot escape or stall.
double bracketed_root(double ti, double tmi, double lo, double hi) {
  double f_lo = cubic_value(ti, tmi, lo);
  const double f_hi = cubic_value(ti, tmi, hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo < 0.0) == (f_hi < 0.0))
    throw RootFindingFailure(
        "bracketed_root: interval endpoints have equal signs");
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double fx = cubic_value(ti, tmi, x);
    if (fx == 0.0) return x;
    if ((fx < 0.0) == (f_lo < 0.0)) {
      lo = x;
      f_lo = fx;
    } else {
      hi = x;
    }
    const double dfx = cubic_slope(ti, tmi, x);
    double next = (dfx != 0.0) ? x - fx / dfx : 0.5 * (lo + hi);
    if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
    const double step = std::fabs(next - x);
    x = next;
    if (step <= 1e-12 * std::fmax(1.0, std::fabs(x))) break;
  }
  return x;
}

void require_positive_inputs(double l1, double l2, double l3, double s,
                             double t) {
  if (!(l1 > 0.0) || !(l2 > 0.0) || !(l3 > 0.0))
    throw DomainError("fiber expression: eigenvalues must be strictly positive");
  if (!(s > 0.0) || !(t > 0.0))
    throw DomainError(
        "fiber expression: fiber parameters must be strictly positive");
}

}  // namespace

Rational discriminant(const Rational& x, const Rational& y) {
  return x * x * y * y - Rational(4) * (x * x * x + y * y * y) +
         Rational(18) * x * y - Rational(27);
}

double discriminant(double x, double y) {
  return x * x * y * y - 4.0 * (x * x * x + y * y * y) + 18.0 * x * y - 27.0;
}

bool boundary_pair_valid(const BoundaryPair& pair) {
  return pair.trace > 0.0 && pair.inverse_trace > 0.0 &&
         discriminant(pair.trace, pair.inverse_trace) > 0.0;
}

std::array<bool, 3> boundary_valid(const BoundaryData& b) {
  return {boundary_pair_valid(b.pairs[0]), boundary_pair_valid(b.pairs[1]),
          boundary_pair_valid(b.pairs[2])};
}

std::array<double, 3> eigenvalue_triple(double ti, double tmi) {
  if (!boundary_pair_valid({ti, tmi}))
    throw InvalidBoundary(
        "eigenvalue_triple: need positive traces with positive discriminant");
  // Three distinct real roots force two real critical points; the roots
  // interleave them as root < c_lo < root < c_hi < root.  All roots are
  // positive (their product is 1) and bounded above by their sum ti.
  const double crit_disc = ti * ti - 3.0 * tmi;
  if (!(crit_disc > 0.0))
    throw RootFindingFailure(
        "eigenvalue_triple: cubic is missing two real critical points");
  const double spread = std::sqrt(crit_disc);
  const double c_lo = (ti - spread) / 3.0;
  const double c_hi = (ti + spread) / 3.0;
  double top = ti;
  int growth = 0;
  while (cubic_value(ti, tmi, top) <= 0.0) {
    top *= 2.0;
    if (++growth > 64)
      throw RootFindingFailure(
          "eigenvalue_triple: no upper bound with positive cubic value");
  }
  return {bracketed_root(ti, tmi, c_hi, top),
          bracketed_root(ti, tmi, c_lo, c_hi),
          bracketed_root(ti, tmi, 0.0, c_lo)};
}

double largest_eigenvalue(double ti, double tmi) {
  return eigenvalue_triple(ti, tmi)[0];
}

// Both fiber expressions are kept as verbatim term lists: one array entry
// per printed summand, no algebraic simplification, every radical the
// positive square root.  Half-integer powers appear as l * sqrt(l) and
// l * l * sqrt(l).

std::array<double, 32> fiber_t4_terms(double l1, double l2, double l3,
                                      double s, double t, double t1,
                                      double t2, double tm3) {
  require_positive_inputs(l1, l2, l3, s, t);
  const double r1 = std::sqrt(l1);
  const double r2 = std::sqrt(l2);
  const double r3 = std::sqrt(l3);
  return {
      1.0 / (s * r1 * r2 * r3),
      r1 * r2 * r3 / s,
      -(s * l1 * r1 * r2 / r3),
      -(s * l2 * r2 * r3 / r1),
      -(s * r1 * l3 * r3 / r2),
      2.0 * s * s,
      -(l1 / (t * l2)),
      -(l3 / (t * l1)),
      1.0 / (s * t * r1 * r2 * r3),
      s * r2 / (t * l1 * r1 * r3),
      s * r3 / (t * r1 * l2 * r2),
      s * r1 * l3 * r3 / (t * r2),
      -(s * s / t),
      -(s * s * l3 * l3 / (t * l1 * l2)),
      s * s * s * r3 / (t * l1 * r1 * r2),
      -(t * l1 * l2 * l2),
      t * r1 * r2 * r3 / s,
      s * t * l1 * r1 * r2 / r3,
      t1 / l2,
      -(l2 * l2 * t1),
      s * r1 * r2 * t1 / r3,
      t1 / (t * l2),
      -(s * l3 * r3 * t1 / (t * r1 * r2)),
      s * s * t1 / (t * l1),
      s * r2 * r3 * t2 / r1,
      t * l1 * l2 * t2,
      l2 * t1 * t2,
      s * r1 * r3 * tm3 / r2,
      tm3 / (t * l1),
      -(s * r1 * r3 * tm3 / (t * r2)),
      s * s * l3 * tm3 / (t * l1 * l2),
      s * r3 * t1 * tm3 / (t * r1 * r2),
  };
}

std::array<double, 32> fiber_tm4_terms(double l1, double l2, double l3,
                                       double s, double t, double t1,
                                       double t2, double tm3) {
  require_positive_inputs(l1, l2, l3, s, t);
  const double r1 = std::sqrt(l1);
  const double r2 = std::sqrt(l2);
  const double r3 = std::sqrt(l3);
  return {
      2.0 / (s * s),
      -(r1 * l2 * r2 / (s * r3)),
      -(l1 * r1 * r3 / (s * r2)),
      -(r2 * l3 * r3 / (s * r1)),
      s / (r1 * r2 * r3),
      s * r1 * r2 * r3,
      l2 / (t * l1),
      l3 / (t * l2),
      l1 * l3 * l3 / t,
      1.0 / (s * s * t),
      -(l1 * r1 * r3 / (s * t * r2)),
      -(r2 * l3 * r3 / (s * t * r1)),
      -(s * r1 * r2 * r3 / t),
      -(s * l3 * l3 * r3 / (t * r1 * r2)),
      s * s * l3 / (t * l1),
      t * l1 / l3,
      t / (s * s),
      -(t * r1 * l2 * r2 / (s * r3)),
      r1 * r3 * t1 / (s * r2),
      -(l3 * l3 * t1 / t),
      r1 * r3 * t1 / (s * t * r2),
      s * r2 * r3 * t1 / (t * r1),
      t2 / l1,
      -(l1 * l1 * t2),
      r1 * r2 * t2 / (s * r3),
      t * r1 * r2 * t2 / (s * r3),
      l1 * t1 * t2,
      r2 * r3 * tm3 / (s * r1),
      -(l1 * l3 * tm3 / t),
      r2 * r3 * tm3 / (s * t * r1),
      // The radical in this denominator spans the product t * l1.
      s * l3 * r3 * tm3 / (std::sqrt(t * l1) * r2),
      l3 * t1 * tm3 / t,
  };
}

double fiber_t4(double l1, double l2, double l3, double s, double t, double t1,
                double t2, double tm3) {
  double sum = 0.0;
  for (double term : fiber_t4_terms(l1, l2, l3, s, t, t1, t2, tm3))
    sum += term;
  return sum;
}

double fiber_tm4(double l1, double l2, double l3, double s, double t,
                 double t1, double t2, double tm3) {
  double sum = 0.0;
  for (double term : fiber_tm4_terms(l1, l2, l3, s, t, t1, t2, tm3))
    sum += term;
  return sum;
}

std::pair<GeneratorPoint<ComplexF>, GeneratorPoint<ComplexF>> fiber_point(
    const BoundaryData& b, const FiberParams& p) {
  const auto valid = boundary_valid(b);
  for (std::size_t k = 0; k < 3; ++k) {
    if (!valid[k])
      throw InvalidBoundary("fiber_point: boundary component " +
                            std::to_string(k + 1) +
                            " lacks positive traces with positive "
                            "discriminant");
  }
  if (!(p.s > 0.0) || !(p.t > 0.0))
    throw DomainError("fiber_point: fiber parameters must be strictly positive");

  const double l1 =
      largest_eigenvalue(b.pairs[0].trace, b.pairs[0].inverse_trace);
  const double l2 =
      largest_eigenvalue(b.pairs[1].trace, b.pairs[1].inverse_trace);
  const double l3 =
      largest_eigenvalue(b.pairs[2].trace, b.pairs[2].inverse_trace);
  const double t1 = b.pairs[0].trace;
  const double t2 = b.pairs[1].trace;
  const double tm3 = b.pairs[2].inverse_trace;

  GeneratorPoint<ComplexF> base;
  base.values[Variable::t(1).code()] = ComplexF(t1);
  base.values[Variable::t(-1).code()] = ComplexF(b.pairs[0].inverse_trace);
  base.values[Variable::t(2).code()] = ComplexF(t2);
  base.values[Variable::t(-2).code()] = ComplexF(b.pairs[1].inverse_trace);
  base.values[Variable::t(3).code()] = ComplexF(b.pairs[2].trace);
  base.values[Variable::t(-3).code()] = ComplexF(tm3);
  base.values[Variable::t(4).code()] =
      ComplexF(fiber_t4(l1, l2, l3, p.s, p.t, t1, t2, tm3));
  base.values[Variable::t(-4).code()] =
      ComplexF(fiber_tm4(l1, l2, l3, p.s, p.t, t1, t2, tm3));

  std::map<std::uint32_t, ComplexF> bind;
  for (int i : {1, -1, 2, -2, 3, -3, 4, -4})
    bind.emplace(Variable::t(i).code(), base.values[Variable::t(i).code()]);
  const double p_val = poly_P().evaluate_complex(bind).re();
  const double q_val = poly_Q().evaluate_complex(bind).re();
  const double quad_disc = p_val * p_val - 4.0 * q_val;

  // The two roots of T^2 - P T + Q: real when the quadratic discriminant
  // is nonnegative, complex conjugates otherwise.  No root is preferred.
  ComplexF upper, lower;
  if (quad_disc >= 0.0) {
    const double spread = std::sqrt(quad_disc);
    upper = ComplexF(0.5 * (p_val + spread));
    lower = ComplexF(0.5 * (p_val - spread));
  } else {
    const double imag = 0.5 * std::sqrt(-quad_disc);
    upper = ComplexF(0.5 * p_val, imag);
    lower = ComplexF(0.5 * p_val, -imag);
  }

  GeneratorPoint<ComplexF> first = base;
  first.values[Variable::t(5).code()] = upper;
  first.t_minus5 = lower;
  GeneratorPoint<ComplexF> second = base;
  second.values[Variable::t(5).code()] = lower;
  second.t_minus5 = upper;
  return {first, second};
}

}  // namespace charvar
