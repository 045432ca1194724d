// Fibration data for convex real-projective structures on the three-holed
// sphere: the eigenvalue discriminant, per-component boundary admissibility,
// the largest-eigenvalue solver, and the closed-form fiber expressions for
// t(4) and t(-4) in two free positive parameters (s, t).
//
// This module works over the reals: rationals where the inputs are rational
// (the discriminant), doubles wherever radicals appear, and complex pairs
// only for the two t(5) roots of the quadratic T^2 - P T + Q.
#pragma once

#include <array>
#include <utility>

#include "charvar/char_ring.hpp"
#include "charvar/complexf.hpp"
#include "charvar/errors.hpp"
#include "charvar/rational.hpp"

namespace charvar {

// d(x, y) = x^2 y^2 - 4(x^3 + y^3) + 18xy - 27: the discriminant of the
// characteristic polynomial u^3 - x u^2 + y u - 1 of a determinant-one
// matrix with trace x and inverse-trace y.  Zero exactly when the matrix
// has a repeated eigenvalue; positive exactly when the eigenvalues are
// real and distinct.  Symmetric in (x, y).
Rational discriminant(const Rational& x, const Rational& y);
double discriminant(double x, double y);

// One boundary component, recorded by the trace pair of its holonomy:
// trace = t(i), inverse_trace = t(-i).
struct BoundaryPair {
  double trace = 0.0;
  double inverse_trace = 0.0;
};

// The three boundary components of the trinion, indexed so that
// pairs[0] = (t(1), t(-1)), pairs[1] = (t(2), t(-2)),
// pairs[2] = (t(3), t(-3)).
struct BoundaryData {
  std::array<BoundaryPair, 3> pairs{};
};

// The two free fiber coordinates; both must be strictly positive.
struct FiberParams {
  double s = 1.0;
  double t = 1.0;
};

// A pair is admissible iff trace > 0, inverse_trace > 0 and
// d(trace, inverse_trace) > 0, all strictly: the holonomy must have
// real, distinct, positive eigenvalues.  Zero discriminant is invalid.
bool boundary_pair_valid(const BoundaryPair& pair);

// Component-wise admissibility of the three boundary pairs.
std::array<bool, 3> boundary_valid(const BoundaryData& b);

// The three roots of u^3 - ti u^2 + tmi u - 1 = 0 in descending order.
// Requires the pair (ti, tmi) to be admissible (all roots are then real,
// distinct and positive); throws InvalidBoundary otherwise.  Roots are
// isolated by the critical points of the cubic and polished to 1e-12
// relative accuracy; RootFindingFailure signals a bracket that fails to
// straddle a sign change (unreachable for admissible input).
std::array<double, 3> eigenvalue_triple(double ti, double tmi);

// eigenvalue_triple(ti, tmi)[0]: the largest eigenvalue of a boundary
// holonomy with trace ti and inverse-trace tmi.
double largest_eigenvalue(double ti, double tmi);

// The individual summands of the two fiber expressions, in a fixed
// left-to-right order; fiber_t4 / fiber_tm4 are their ordered sums.
// Exposed so callers can check term-level values and order-independence
// of the summation.  All square roots take the positive branch.
// Throws DomainError unless l1, l2, l3, s, t are all strictly positive
// (t1, t2, tm3 are unconstrained).
std::array<double, 32> fiber_t4_terms(double l1, double l2, double l3,
                                      double s, double t, double t1,
                                      double t2, double tm3);
std::array<double, 32> fiber_tm4_terms(double l1, double l2, double l3,
                                       double s, double t, double t1,
                                       double t2, double tm3);

// Closed-form value of t(4) on the fiber over a fixed boundary, where
// l1, l2, l3 are the largest eigenvalues of the three boundary holonomies,
// (s, t) are the free fiber parameters, and t1 = t(1), t2 = t(2),
// tm3 = t(-3) are the boundary traces entering the expression.
double fiber_t4(double l1, double l2, double l3, double s, double t,
                double t1, double t2, double tm3);

// Closed-form value of t(-4) on the fiber; same argument convention.
double fiber_tm4(double l1, double l2, double l3, double s, double t,
                 double t1, double t2, double tm3);

// Assembles the full trace tuple of the fiber point: t(+-1..+-3) copied
// from the boundary data, t(+-4) from the fiber expressions (with the
// largest eigenvalues computed per component), and t(5) from the quadratic
// T^2 - P T + Q = 0 at the assembled base point.  The quadratic has two
// roots and no canonical choice between them, so both completions are
// returned: the two points agree on t(+-1..+-4) and swap t(5) with t(-5).
// Complex-conjugate roots are reported as such.  Throws InvalidBoundary
// if any boundary pair is inadmissible and DomainError for nonpositive
// fiber parameters.
std::pair<GeneratorPoint<ComplexF>, GeneratorPoint<ComplexF>> fiber_point(
    const BoundaryData& b, const FiberParams& p);

}  // namespace charvar
