#include "charvar/families.hpp"

#include <cmath>

namespace charvar {

namespace {

Rational block_det(const Block2& b) { return b[0] * b[3] - b[1] * b[2]; }

Mat3<Rational> embed_block(const Block2& b, const Rational& corner) {
  Mat3<Rational> m;
  m.at(0, 0) = b[0];
  m.at(0, 1) = b[1];
  m.at(1, 0) = b[2];
  m.at(1, 1) = b[3];
  m.at(2, 2) = corner;
  return m;
}

}  // namespace

RepPair<Rational> family_sl2(const Block2& b1, const Block2& b2) {
  for (const Block2* b : {&b1, &b2})
    if (block_det(*b) != Rational(1))
      throw BlockNotUnimodular("family_sl2: 2x2 block determinant is not 1");
  return {embed_block(b1, Rational(1)), embed_block(b2, Rational(1))};
}

RepPair<Rational> family_diag(const Rational& a1, const Rational& b1, const Rational& a2,
                              const Rational& b2) {
  for (const Rational* q : {&a1, &b1, &a2, &b2})
    if (q->is_zero()) throw ZeroParameter("family_diag: parameters must be nonzero");
  return {Mat3<Rational>::diag(a1, b1, (a1 * b1).inverse()),
          Mat3<Rational>::diag(a2, b2, (a2 * b2).inverse())};
}

RepPair<Rational> family_gl2(const Block2& b1, const Block2& b2) {
  for (const Block2* b : {&b1, &b2})
    if (block_det(*b).is_zero()) throw SingularBlock("family_gl2: 2x2 block is singular");
  return {embed_block(b1, block_det(b1).inverse()), embed_block(b2, block_det(b2).inverse())};
}

std::pair<RepPair<ComplexF>, RepPair<ComplexF>> pair_rho1_rho2(const ComplexF& a,
                                                               const ComplexF& b) {
  if ((a * b).abs() == 0.0) throw ZeroParameter("pair_rho1_rho2: a*b must be nonzero");
  const ComplexF inv_ab = ComplexF(1.0) / (a * b);
  const Mat3<ComplexF> m1 = Mat3<ComplexF>::diag(a, b, inv_ab);
  const ComplexF s(std::pow(4.0, -1.0 / 3.0));
  const ComplexF p = s, n = -s;
  const Mat3<ComplexF> x2_rho1({p, p, n,    //
                                p, n, p,    //
                                n, n, n});  //
  const Mat3<ComplexF> x2_rho2({p, n, p,    //
                                n, n, n,    //
                                p, p, n});  //
  return {RepPair<ComplexF>{m1, x2_rho1}, RepPair<ComplexF>{m1, x2_rho2}};
}

namespace {

template <typename S>
RepPair<S> build_ac(const S& a, const S& inv_a2, const S& scale, const S& inv_c) {
  const Mat3<S> m1 = Mat3<S>::diag(a, a, inv_a2);
  const S one = ScalarTraits<S>::one();
  Mat3<S> m2({one, one, -one,             //
              one, -one, one,             //
              -inv_c, -inv_c, -inv_c});   //
  m2 = m2 * scale;
  return {m1, m2};
}

}  // namespace

RepPair<ComplexF> family_ac(const Rational& a, const Rational& c) {
  if (a.is_zero() || c.is_zero()) throw ZeroParameter("family_ac: a and c must be nonzero");
  const double ad = a.to_double(), cd = c.to_double();
  // Real cube root of c/4 (negative c allowed).
  const double root = std::cbrt(cd / 4.0);
  return build_ac(ComplexF(ad), ComplexF(1.0 / (ad * ad)), ComplexF(root), ComplexF(1.0 / cd));
}

std::optional<RepPair<Rational>> family_ac_exact(const Rational& a, const Rational& c) {
  if (a.is_zero() || c.is_zero()) throw ZeroParameter("family_ac: a and c must be nonzero");
  Rational root;
  if (!rational_cube_root(c / Rational(4), &root)) return std::nullopt;
  return build_ac(a, (a * a).inverse(), root, c.inverse());
}

}  // namespace charvar
