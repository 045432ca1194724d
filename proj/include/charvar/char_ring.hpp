#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "charvar/dihedral.hpp"
#include "charvar/errors.hpp"
#include "charvar/mat3.hpp"
#include "charvar/polynomial.hpp"
#include "charvar/word.hpp"

namespace charvar {

// The defining word of the coordinate t(i), for i in {+-1..+-4, +-5}:
// x1, x1^-1, x2, x2^-1, x1x2, x1^-1x2^-1, x1x2^-1, x1^-1x2, and the two
// commutators x1x2x1^-1x2^-1, x2x1x2^-1x1^-1.
const Word& coordinate_word(int i);

// Values of the trace coordinates at one representation pair: t(+-1..+-4)
// and t(5), with t(-5) carried along when known.  Scalar is Rational for
// exact pairs or ComplexF for floating ones.
template <typename S>
struct GeneratorPoint {
  // values[k] holds t(i) where k = Variable::t(i).code(), for codes 0..8.
  std::array<S, 9> values{};
  std::optional<S> t_minus5;

  const S& at(int i) const {
    if (i == -5) {
      if (!t_minus5) throw DomainError("GeneratorPoint: t(-5) not populated");
      return *t_minus5;
    }
    if (i == 0 || i < -5 || i > 5)
      throw DomainError("GeneratorPoint: no coordinate with index " + std::to_string(i));
    return values[Variable::t(i).code()];
  }

  // Bindings for Polynomial::evaluate / evaluate_complex; includes t(-5)
  // when populated.
  std::map<std::uint32_t, S> bindings() const {
    std::map<std::uint32_t, S> b;
    for (int i : {1, -1, 2, -2, 3, -3, 4, -4, 5})
      b.emplace(Variable::t(i).code(), values[Variable::t(i).code()]);
    if (t_minus5) b.emplace(Variable::t(-5).code(), *t_minus5);
    return b;
  }
};

// Trace coordinates of a unimodular pair (both determinants are checked
// before any inversion; NotUnimodular otherwise).  All ten words are
// evaluated, so t(-5) is always populated.
template <typename S>
GeneratorPoint<S> pi_map(const RepPair<S>& pair) {
  if (!ScalarTraits<S>::is_unit_det(det(pair.m1)) ||
      !ScalarTraits<S>::is_unit_det(det(pair.m2)))
    throw NotUnimodular("pi_map: both matrices must have determinant 1");
  GeneratorPoint<S> p;
  for (int i : {1, -1, 2, -2, 3, -3, 4, -4, 5})
    p.values[Variable::t(i).code()] = trace_of(coordinate_word(i), pair);
  p.t_minus5 = trace_of(coordinate_word(-5), pair);
  return p;
}

// The 10-term quartic P, with P - (t(5) + t(-5)) in the kernel of the
// evaluation map.
const Polynomial& poly_P();
// The 73-term degree-6 polynomial Q, with Q - t(5)t(-5) in the kernel.
const Polynomial& poly_Q();
// t(5)^2 - P t(5) + Q: the defining equation of the hypersurface.
const Polynomial& sextic();
// P^2 - 4Q: the branch locus of the 2-to-1 projection onto the base
// coordinates.
const Polynomial& branch_locus();

// The nine-word basis x1, x2, x1^-1, x2^-1, x1x2, x2x1, x1x2^-1, x2^-1x1,
// x2x1^-1 feeding the bilinear form B(A, B) = 3 tr(AB) - tr(A) tr(B).
const std::array<Word, 9>& lambda_basis();

// The symmetric 9x9 matrix (B(A_i, A_j)) over the basis above.  Always
// singular on unimodular pairs.
template <typename S>
std::array<std::array<S, 9>, 9> lambda_matrix(const RepPair<S>& pair) {
  if (!ScalarTraits<S>::is_unit_det(det(pair.m1)) ||
      !ScalarTraits<S>::is_unit_det(det(pair.m2)))
    throw NotUnimodular("lambda_matrix: both matrices must have determinant 1");
  std::array<Mat3<S>, 9> reps;
  std::array<S, 9> traces;
  for (int k = 0; k < 9; ++k) {
    reps[k] = eval_word(lambda_basis()[static_cast<std::size_t>(k)], pair);
    traces[k] = trace(reps[k]);
  }
  std::array<std::array<S, 9>, 9> lam;
  for (int r = 0; r < 9; ++r)
    for (int c = 0; c < 9; ++c)
      lam[r][c] = trace(reps[r] * reps[c]) * S(3) - traces[r] * traces[c];
  return lam;
}

// det of the lambda matrix with the commutator trace kept formal: writing
// every entry as a linear polynomial a + b*T in T = t(5) (base coordinates
// evaluated at the pair), the determinant is the quadratic
// c2 T^2 + c1 T + c0.  The singularity fact forces
// (c1, c0) = (-P c2, Q c2) and det = 0 at the point's own t(5).
struct LambdaDecomposition {
  Rational c2, c1, c0;
};
LambdaDecomposition lambda_det_decomposition(const RepPair<Rational>& pair);

// First partial derivatives keyed by subscript i, 1 <= |i| <= 4.  The
// entries of partials_P and the positive-index entries of partials_Q are
// stored as independently transcribed formulas (the formal derivative is
// recomputed in tests); negative-index entries of partials_Q come from the
// subscript-negation symmetry dQ/dt(-k) = dQ/dt(k) with every t(i)
// replaced by t(-i).
const std::map<int, Polynomial>& partials_P();
const std::map<int, Polynomial>& partials_Q();

// The nine generators of the Jacobian ideal of the sextic:
// -t(5) dP/dt(i) + dQ/dt(i) in the index order 1, -1, 2, -2, 3, -3, 4, -4,
// followed by 2 t(5) - P.
const std::vector<Polynomial>& jacobian_generators();

// Simultaneous bindings cutting out the image of pairs from the embedded
// rank-2 special linear group: t(-i) -> t(i) rewritten as polynomials in
// t(1), t(2), t(3) via
//   t(4) = t(1)t(2) - t(3) - t(1) - t(2) + 3
// and the quadratic expression for t(5).  Suitable for
// Polynomial::substitute; every Jacobian generator vanishes identically
// under them.
const std::map<std::uint32_t, Polynomial>& sl2_bindings();

// Action of a symmetry element on a polynomial: permute the subscripts of
// t(+-1..+-4) and, for elements swapping t(+-5), substitute
// t(5) -> P - t(5) and t(-5) -> t(5).
Polynomial apply_dihedral(const DihedralElement& g, const Polynomial& f);

// Sum of the eight images of f under the group; f must avoid t(+-5)
// (VariableOutOfSubring), where the action is a pure permutation.
Polynomial symmetrizer(const Polynomial& f);

// The seed polynomials of the symmetrizer identities
//   P = symmetrizer(p) - 3,   Q = symmetrizer(q) + 9.
const Polynomial& symmetrizer_seed_p();
const Polynomial& symmetrizer_seed_q();

// Z3 x Z3 grading weight of a monomial over the t-variables:
// t(1) -> (1,0), t(-1) -> (2,0), t(2) -> (0,1), t(-2) -> (0,2),
// t(3) -> (1,1), t(-3) -> (2,2), t(4) -> (1,2), t(-4) -> (2,1),
// t(+-5) -> (0,0), each scaled by its exponent mod 3.  Throws
// VariableOutOfSubring for any non-t variable.
Z3Weight grading_weight(const Monomial& m);

// The common weight of all terms, or nullopt when terms disagree.  The zero
// polynomial reports weight (0,0).
std::optional<Z3Weight> is_homogeneous(const Polynomial& f);

}  // namespace charvar
