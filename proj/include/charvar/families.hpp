#pragma once

#include <array>
#include <optional>
#include <utility>

#include "charvar/mat3.hpp"

namespace charvar {

// 2x2 rational block, row-major.
using Block2 = std::array<Rational, 4>;

// Embeds two unimodular 2x2 blocks as upper-left blocks with corner entry 1.
RepPair<Rational> family_sl2(const Block2& b1, const Block2& b2);

// Pair of diag(a, b, 1/(ab)) matrices; all parameters nonzero.
RepPair<Rational> family_diag(const Rational& a1, const Rational& b1, const Rational& a2,
                              const Rational& b2);

// Embeds two invertible 2x2 blocks with corner entry 1/det(block).
RepPair<Rational> family_gl2(const Block2& b1, const Block2& b2);

// The two explicit representations that agree on all generator traces of the
// eight-variable subring but differ on the commutator trace: x1 is
// diag(a, b, 1/(ab)) for both, x2 is a sign-patterned matrix scaled by
// 4^(-1/3), with the two sign patterns differing between the members.
std::pair<RepPair<ComplexF>, RepPair<ComplexF>> pair_rho1_rho2(const ComplexF& a,
                                                               const ComplexF& b);

// Two-parameter family inside the branch locus: x1 = diag(a, a, 1/a^2) and
// x2 = (c/4)^(1/3) * [[1,1,-1],[1,-1,1],[-1/c,-1/c,-1/c]]. Floating scalars;
// requires a != 0 and c != 0.
RepPair<ComplexF> family_ac(const Rational& a, const Rational& c);

// Exact variant, available precisely when c/4 is the cube of a rational.
std::optional<RepPair<Rational>> family_ac_exact(const Rational& a, const Rational& c);

}  // namespace charvar
