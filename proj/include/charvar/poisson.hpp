#pragma once

#include <map>
#include <utility>

#include "charvar/polynomial.hpp"

namespace charvar {

// Canonical module form of a polynomial in the ten t-variables: t(-5) is
// substituted by P - t(5), then t(5)^2 is rewritten to P t(5) - Q until the
// t(5)-degree is at most 1.
Polynomial normal_form(const Polynomial& f);

// Bracket values on the generator pairs that do not commute, keyed (i, j):
//   (4, -4) -> P - 2 t(5)
//   (4, 5), (-4, 5) -> the printed expansions.
// All other generator pairs vanish: t(+-1), t(+-2), t(+-3) are Casimirs.
const std::map<std::pair<int, int>, Polynomial>& bracket_table();

// Poisson bracket of two polynomials over R[t(5)] (t(-5) allowed; it is
// rewritten away first):
//   {f, g} = sum over table pairs (u,v) of
//            (df/du dg/dv - df/dv dg/du) {t(u), t(v)},
// reduced to normal form.  Bilinear, antisymmetric, Leibniz; the base
// coordinates t(+-1..+-3) commute with everything.
Polynomial bracket(const Polynomial& f, const Polynomial& g);

// {f,{g,h}} + {g,{h,f}} + {h,{f,g}} in normal form (zero iff the Jacobi
// identity holds on the triple).
Polynomial jacobi_residual(const Polynomial& f, const Polynomial& g,
                           const Polynomial& h);

// Printed closed forms of {t(+-4), P} and {t(+-4), Q}; sign_index is +4 or
// -4 (DomainError otherwise).
const Polynomial& printed_bracket_with_P(int sign_index);
const Polynomial& printed_bracket_with_Q(int sign_index);

// Residual of the cleared-denominator relation defining {t(+-4), t(5)}:
//   (2 t(5) - P) {t(+-4), t(5)} - (t(5) {t(+-4), P} - {t(+-4), Q})
// in normal form; identically zero for both signs.
Polynomial t5_consistency_residual(int sign_index);

// Coefficients of the Poisson bivector field
//   (P - 2t(5)) d/d4 ^ d/d-4 + a d/d4 ^ d/d5 - i(a) d/d-4 ^ d/d5
// where a = {t(4), t(5)} and i negates every base subscript.
struct BivectorField {
  Polynomial c4_m4;  // coefficient of d/dt(4) ^ d/dt(-4)
  Polynomial c4_5;   // coefficient of d/dt(4) ^ d/dt(5)
  Polynomial cm4_5;  // coefficient of d/dt(-4) ^ d/dt(5)
};
const BivectorField& poisson_bivector();

// The intersection-sum identity for {t(4), t(5)}: reduces the four traces
//   tr(x1 x2^-1 x1^-1 x2^-1 x1 x2) - tr(x1 x2^-1)
//   + tr(x2^-2 x1^2 x2 x1^-1) - tr(x2^-1 x1 x2^-1 x1 x2 x1^-1)
// and subtracts {t(4), t(5)}; identically zero in normal form.
Polynomial comment1_residual();

}  // namespace charvar
