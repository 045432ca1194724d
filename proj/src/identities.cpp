#include "charvar/identities.hpp"

#include <utility>

#include "charvar/errors.hpp"

namespace charvar {
namespace {

using M = Mat3<Rational>;
using R = Rational;

const R kHalf(1, 2);
const R kThird(1, 3);
const R kSixth(1, 6);

M eye() { return M::identity(); }

R rabs(const R& v) { return v.sign() < 0 ? -v : v; }

M mat_abs(const M& m) {
  M r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.at(i, j) = rabs(m.at(i, j));
  return r;
}

// det written purely in traces: det(x) = tr(x^3)/3 + tr(x)^3/6 - tr(x)tr(x^2)/2.
R det_in_traces(const M& x) {
  const M x2 = x * x;
  return kThird * trace(x2 * x) + kSixth * trace(x) * trace(x) * trace(x) -
         kHalf * trace(x) * trace(x2);
}

// Scalar-parametrized identities are cubic in the parameter; checking the
// four nodes below pins the full polynomial.
const std::array<R, 4> kLambdaNodes = {R(1), R(2), R(3), R(7)};

Residual scalar_res(R v) { return Residual(std::move(v)); }
Residual matrix_res(M m) { return Residual(std::move(m)); }

IdentityRecord make(std::string name, int arity, bool matrix_valued,
                    std::vector<int> unimodular_slots, std::string slots,
                    std::function<Residual(const std::vector<M>&)> eval) {
  IdentityRecord rec;
  rec.name = std::move(name);
  rec.arity = arity;
  rec.matrix_valued = matrix_valued;
  rec.unimodular_slots = std::move(unimodular_slots);
  rec.slot_names = std::move(slots);
  rec.eval = std::move(eval);
  return rec;
}

std::vector<IdentityRecord> build_catalog() {
  std::vector<IdentityRecord> cat;

  // x^3 - tr(x) x^2 + tr(adj(x)) x - det(x) I = 0.
  cat.push_back(make("cayham", 1, true, {}, "x", [](const std::vector<M>& a) {
    const M& x = a[0];
    const M x2 = x * x;
    return matrix_res(x2 * x - x2 * trace(x) + x * trace(adjugate(x)) -
                      eye() * det(x));
  }));

  // tr(adj(x)) = (tr(x)^2 - tr(x^2)) / 2.
  cat.push_back(make("trinv", 1, false, {}, "x", [](const std::vector<M>& a) {
    const M& x = a[0];
    return scalar_res(trace(adjugate(x)) -
                      kHalf * (trace(x) * trace(x) - trace(x * x)));
  }));

  // det(x) = tr(x^3)/3 + tr(x)^3/6 - tr(x) tr(x^2)/2.
  cat.push_back(make("dettr", 1, false, {}, "x", [](const std::vector<M>& a) {
    return scalar_res(det(a[0]) - det_in_traces(a[0]));
  }));

  // x^2 y - tr(x) x y + tr(x^-1) y - x^-1 y = 0 for unimodular x.
  cat.push_back(make("cayham2", 2, true, {0}, "x y",
                     [](const std::vector<M>& a) {
                       const M& x = a[0];
                       const M& y = a[1];
                       const M xi = inverse_sl(x);
                       return matrix_res(x * x * y - x * y * trace(x) +
                                         y * trace(xi) - xi * y);
                     }));

  // det(x + Ly) as a cubic in L with trace coefficients; summed absolute
  // residual over the four lambda nodes.
  cat.push_back(make("detsum", 2, false, {}, "x y",
                     [](const std::vector<M>& a) {
                       const M& x = a[0];
                       const M& y = a[1];
                       const R c3 = det_in_traces(y);
                       const R c2 = trace(x * y * y) +
                                    kHalf * trace(x) * trace(y) * trace(y) -
                                    kHalf * trace(x) * trace(y * y) -
                                    trace(y) * trace(x * y);
                       const R c1 = trace(x * x * y) +
                                    kHalf * trace(y) * trace(x) * trace(x) -
                                    kHalf * trace(y) * trace(x * x) -
                                    trace(x) * trace(x * y);
                       const R c0 = det_in_traces(x);
                       R acc(0);
                       for (const R& l : kLambdaNodes) {
                         const R rhs = ((c3 * l + c2) * l + c1) * l + c0;
                         acc += rabs(det(x + y * l) - rhs);
                       }
                       return scalar_res(acc);
                     }));

  // (x + Ly) tr((x + Ly)*) as a matrix cubic in L; summed entrywise
  // absolute residual over the four lambda nodes.
  cat.push_back(make(
      "adjtrace-sum", 2, true, {}, "x y", [](const std::vector<M>& a) {
        const M& x = a[0];
        const M& y = a[1];
        const R tx = trace(x), ty = trace(y);
        const R tx2 = trace(x * x), ty2 = trace(y * y), txy = trace(x * y);
        const M m3 = y * (kHalf * ty * ty) - y * (kHalf * ty2);
        const M m2 = x * (kHalf * ty * ty) - x * (kHalf * ty2) +
                     y * (tx * ty) - y * txy;
        const M m1 = y * (kHalf * tx * tx) - y * (kHalf * tx2) +
                     x * (tx * ty) - x * txy;
        const M m0 = x * (kHalf * tx * tx) - x * (kHalf * tx2);
        M acc;
        for (const R& l : kLambdaNodes) {
          const M s = x + y * l;
          const M rhs = ((m3 * l + m2) * l + m1) * l + m0;
          acc = acc + mat_abs(s * trace(adjugate(s)) - rhs);
        }
        return matrix_res(acc);
      }));

  // y x^2 + x^2 y + x y x equals its trace-coefficient expansion.  The
  // right-hand side here is transcribed independently of pol_rhs so the two
  // transcriptions check each other.
  cat.push_back(make(
      "polarization", 2, true, {}, "x y", [](const std::vector<M>& a) {
        const M& x = a[0];
        const M& y = a[1];
        const M x2 = x * x;
        const R tx = trace(x), ty = trace(y);
        const R tx2 = trace(x2), txy = trace(x * y);
        const M rhs = x2 * ty + (y * x) * tx + (x * y) * tx - x * (tx * ty) +
                      x * txy + eye() * trace(y * x2) + eye() * (tx * txy) -
                      (y * (tx * tx) - y * tx2 - eye() * (ty * tx * tx) +
                       eye() * (ty * tx2)) *
                          kHalf;
        return matrix_res(y * x2 + x2 * y + x * y * x - rhs);
      }));

  // The pol helper itself reproduces y x^2 + x^2 y + x y x.
  cat.push_back(make("pol", 2, true, {}, "x y", [](const std::vector<M>& a) {
    const M& x = a[0];
    const M& y = a[1];
    const M x2 = x * x;
    return matrix_res(pol_rhs(x, y) - (y * x2 + x2 * y + x * y * x));
  }));

  // Full polarization of the cube: sum of the six orderings of x, y, z
  // equals pol(x+z, y) - pol(x, y) - pol(z, y).
  cat.push_back(make(
      "fundamental", 3, true, {}, "x y z", [](const std::vector<M>& a) {
        const M& x = a[0];
        const M& y = a[1];
        const M& z = a[2];
        const M lhs = x * z * y + z * x * y + y * x * z + y * z * x +
                      x * y * z + z * y * x;
        return matrix_res(lhs - (pol_rhs(x + z, y) - pol_rhs(x, y) -
                                 pol_rhs(z, y)));
      }));

  // Trace of u * polarization * v.
  cat.push_back(make(
      "fund1", 4, false, {}, "x y u v", [](const std::vector<M>& a) {
        const M& x = a[0];
        const M& y = a[1];
        const M& u = a[2];
        const M& v = a[3];
        const M x2 = x * x;
        const R tx = trace(x), ty = trace(y);
        const R tx2 = trace(x2), txy = trace(x * y);
        const R lhs = trace(u * y * x2 * v) + trace(u * x2 * y * v);
        const R rhs = -trace(u * x * y * x * v) + ty * trace(u * x2 * v) +
                      tx * trace(u * y * x * v) + tx * trace(u * x * y * v) -
                      (tx * ty - txy) * trace(u * x * v) +
                      (trace(y * x2) - tx * txy) * trace(u * v) -
                      kHalf * (tx * tx - tx2) * trace(u * y * v) +
                      kHalf * (ty * tx * tx - ty * tx2) * trace(u * v);
        return scalar_res(lhs - rhs);
      }));

  // Commutator trace relation before eliminating the auxiliary traces.
  cat.push_back(make(
      "fund2", 2, false, {0, 1}, "x y", [](const std::vector<M>& a) {
        const M& x = a[0];
        const M& y = a[1];
        const M xi = inverse_sl(x);
        const M yi = inverse_sl(y);
        const R lhs = trace(x * y * xi * yi);
        const R rhs = -trace(y * x * yi * xi) - R(3) +
                      trace(y) * trace(yi) + 2 * (trace(x) * trace(xi)) -
                      trace(x) * trace(y) * trace(xi * yi) +
                      trace(x * y) * trace(xi * yi) -
                      trace(xi) * trace(yi * xi * y * xi) +
                      (trace(y * x * x) - trace(x) * trace(x * y) +
                       trace(xi) * trace(y)) *
                          trace(yi * xi * xi);
        return scalar_res(lhs - rhs);
      }));

  // tr(y^-1 x^-2) in terms of single-inverse traces.
  cat.push_back(make(
      "inv-square", 2, false, {0, 1}, "x y", [](const std::vector<M>& a) {
        const M& x = a[0];
        const M& y = a[1];
        const M xi = inverse_sl(x);
        const M yi = inverse_sl(y);
        const R lhs = trace(yi * xi * xi);
        const R rhs = trace(xi) * trace(xi * yi) - trace(x) * trace(yi) +
                      trace(x * yi);
        return scalar_res(lhs - rhs);
      }));

  // tr(y^-1 x^-1 y x^-1) in terms of the nine generators.
  cat.push_back(make(
      "inv-cross", 2, false, {0, 1}, "x y", [](const std::vector<M>& a) {
        const M& x = a[0];
        const M& y = a[1];
        const M xi = inverse_sl(x);
        const M yi = inverse_sl(y);
        const R lhs = trace(yi * xi * y * xi);
        const R rhs = trace(xi * yi) * trace(xi * y) -
                      trace(x) * trace(y) * trace(yi) +
                      trace(y) * trace(x * yi) + trace(x) +
                      trace(x * y) * trace(yi);
        return scalar_res(lhs - rhs);
      }));

  // The commutator trace plus its reverse equals a polynomial in the nine
  // generators.
  cat.push_back(make(
      "polyp1", 2, false, {0, 1}, "x y", [](const std::vector<M>& a) {
        const M& x = a[0];
        const M& y = a[1];
        const M xi = inverse_sl(x);
        const M yi = inverse_sl(y);
        const R lhs = trace(x * y * xi * yi);
        const R rhs = -trace(y * x * yi * xi) +
                      trace(x) * trace(xi) * trace(y) * trace(yi) +
                      trace(x) * trace(xi) + trace(y) * trace(yi) +
                      trace(x * y) * trace(xi * yi) +
                      trace(x * yi) * trace(xi * y) -
                      trace(xi) * trace(y) * trace(x * yi) -
                      trace(x) * trace(yi) * trace(xi * y) -
                      trace(x) * trace(y) * trace(xi * yi) -
                      trace(x * y) * trace(xi) * trace(yi) - R(3);
        return scalar_res(lhs - rhs);
      }));

  // tr(u x^n v) three-term recursion for unimodular x, summed over n = 2..5.
  cat.push_back(make(
      "powerreduce", 3, false, {0}, "x u v", [](const std::vector<M>& a) {
        const M& x = a[0];
        const M& u = a[1];
        const M& v = a[2];
        const R tx = trace(x);
        const R txi = trace(inverse_sl(x));
        R acc(0);
        for (int n = 2; n <= 5; ++n) {
          const R lhs = trace(u * mat_pow(x, n) * v);
          const R rhs = tx * trace(u * mat_pow(x, n - 1) * v) -
                        txi * trace(u * mat_pow(x, n - 2) * v) +
                        trace(u * mat_pow(x, n - 3) * v);
          acc += rabs(lhs - rhs);
        }
        return scalar_res(acc);
      }));

  // x^2 z y^2 expressed through pol; first form.
  cat.push_back(make(
      "lemma-eq4", 3, true, {}, "x y z", [](const std::vector<M>& a) {
        const M& x = a[0];
        const M& y = a[1];
        const M& z = a[2];
        const M lhs = x * x * z * y * y;
        const M rhs = (x * y * y * x) * R(-1) * z -
                      (x * y * x) * z * y + x * pol_rhs(y, x * z);
        return matrix_res(lhs - rhs);
      }));

  // x^2 z y^2 expressed through pol; second form.
  cat.push_back(make(
      "lemma-eq5", 3, true, {}, "x y z", [](const std::vector<M>& a) {
        const M& x = a[0];
        const M& y = a[1];
        const M& z = a[2];
        const M x2 = x * x;
        const M y2 = y * y;
        const M lhs = x2 * z * y2;
        const M rhs = (y2 * x2 + x2 * y2 - pol_rhs(x, y2)) * z +
                      (y * x2 + x2 * y - pol_rhs(x, y)) * z * y +
                      x * pol_rhs(y, x * z);
        return matrix_res(lhs - rhs);
      }));

  // 3 x^2 z y^2 as a pol combination with no bare monomial remainder.
  cat.push_back(make(
      "lemma-eq6", 3, true, {}, "x y z", [](const std::vector<M>& a) {
        const M& x = a[0];
        const M& y = a[1];
        const M& z = a[2];
        const M x2 = x * x;
        const M y2 = y * y;
        const M lhs = x2 * z * y2 * R(3);
        const M rhs = pol_rhs(y, x2 * z) + x * pol_rhs(y, x * z) -
                      pol_rhs(x, y2) * z - pol_rhs(x, y) * z * y +
                      x2 * pol_rhs(y, z);
        return matrix_res(lhs - rhs);
      }));

  // The six even rearrangements of (xy)(zu)(vw) as a pol combination.
  cat.push_back(make(
      "lemma-eq7", 6, true, {}, "x y z u v w", [](const std::vector<M>& m) {
        const M p = m[0] * m[1];  // xy
        const M q = m[2] * m[3];  // zu
        const M r = m[4] * m[5];  // vw
        const M lhs = p * r * q + r * p * q + q * p * r + q * r * p +
                      p * q * r + r * q * p;
        return matrix_res(lhs - (pol_rhs(p + r, q) - pol_rhs(p, q) -
                                 pol_rhs(r, q)));
      }));

  // polyp1 specialized to the two free generators: the inverse commutator
  // trace in terms of the other eight generators and the commutator trace.
  cat.push_back(make(
      "polyp2", 2, false, {0, 1}, "x1 x2", [](const std::vector<M>& a) {
        const M& x1 = a[0];
        const M& x2 = a[1];
        const M x1i = inverse_sl(x1);
        const M x2i = inverse_sl(x2);
        const R lhs = trace(x2 * x1 * x2i * x1i);
        const R rhs = -trace(x1 * x2 * x1i * x2i) +
                      trace(x1) * trace(x1i) * trace(x2) * trace(x2i) +
                      trace(x1) * trace(x1i) + trace(x2) * trace(x2i) +
                      trace(x1 * x2) * trace(x1i * x2i) +
                      trace(x1 * x2i) * trace(x1i * x2) -
                      trace(x1i) * trace(x2) * trace(x1 * x2i) -
                      trace(x1) * trace(x2i) * trace(x1i * x2) -
                      trace(x1) * trace(x2) * trace(x1i * x2i) -
                      trace(x1 * x2) * trace(x1i) * trace(x2i) - R(3);
        return scalar_res(lhs - rhs);
      }));

  return cat;
}

}  // namespace

bool residual_is_zero(const Residual& r) {
  if (const auto* s = std::get_if<Rational>(&r)) return s->is_zero();
  const auto& m = std::get<Mat3<Rational>>(r);
  return m == Mat3<Rational>();
}

double residual_magnitude(const Residual& r) {
  if (const auto* s = std::get_if<Rational>(&r)) {
    const double d = s->to_double();
    return d < 0 ? -d : d;
  }
  const auto& m = std::get<Mat3<Rational>>(r);
  double best = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double d = m.at(i, j).to_double();
      if (d < 0) d = -d;
      if (d > best) best = d;
    }
  return best;
}

Mat3<Rational> pol_rhs(const Mat3<Rational>& x, const Mat3<Rational>& y) {
  const M x2 = x * x;
  const R tx = trace(x), ty = trace(y);
  const R tx2 = trace(x2), txy = trace(x * y);
  // tr(y) x^2 + tr(x) yx + tr(x) xy - tr(x)tr(y) x + tr(xy) x + tr(yx^2) I
  // + tr(x)tr(xy) I - (tr(x)^2 y - tr(x^2) y - tr(y)tr(x)^2 I
  //                    + tr(y)tr(x^2) I) / 2.
  return x2 * ty + (y * x) * tx + (x * y) * tx - x * (tx * ty) + x * txy +
         eye() * trace(y * x2) + eye() * (tx * txy) -
         (y * (tx * tx) - y * tx2 - eye() * (ty * tx * tx) +
          eye() * (ty * tx2)) *
             kHalf;
}

const std::vector<IdentityRecord>& identity_catalog() {
  static const std::vector<IdentityRecord> cat = build_catalog();
  return cat;
}

const IdentityRecord& find_identity(const std::string& name) {
  for (const IdentityRecord& rec : identity_catalog())
    if (rec.name == name) return rec;
  throw UnknownIdentity("unknown identity: " + name);
}

Residual identity_residual(const std::string& name,
                           const std::vector<Mat3<Rational>>& mats) {
  const IdentityRecord& rec = find_identity(name);
  if (static_cast<int>(mats.size()) != rec.arity)
    throw ArityMismatch("identity " + name + " expects " +
                        std::to_string(rec.arity) + " matrices, got " +
                        std::to_string(mats.size()));
  for (int slot : rec.unimodular_slots)
    if (!ScalarTraits<Rational>::is_unit_det(det(mats[static_cast<std::size_t>(slot)])))
      throw NotUnimodular("identity " + name + ": slot " +
                          std::to_string(slot) + " must be unimodular");
  return rec.eval(mats);
}

}  // namespace charvar
