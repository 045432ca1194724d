#include "charvar/char_ring.hpp"

#include <string>
#include <utility>

#include "charvar/linsolve.hpp"
#include "charvar/reduce.hpp"

namespace charvar {
namespace {

// Mirror map on subscripts: t(i) -> t(-i) for every base coordinate.
const std::map<int, int>& negation_map() {
  static const std::map<int, int> sigma = {{1, -1}, {-1, 1}, {2, -2}, {-2, 2},
                                           {3, -3}, {-3, 3}, {4, -4}, {-4, 4}};
  return sigma;
}

Z3Weight coordinate_grading(int i) {
  switch (i) {
    case 1:
      return {1, 0};
    case -1:
      return {2, 0};
    case 2:
      return {0, 1};
    case -2:
      return {0, 2};
    case 3:
      return {1, 1};
    case -3:
      return {2, 2};
    case 4:
      return {1, 2};
    case -4:
      return {2, 1};
    default:  // +-5
      return {0, 0};
  }
}

}  // namespace

const Word& coordinate_word(int i) {
  static const std::map<int, Word> words = [] {
    std::map<int, Word> w;
    w.emplace(1, Word::parse("x1"));
    w.emplace(-1, Word::parse("X1"));
    w.emplace(2, Word::parse("x2"));
    w.emplace(-2, Word::parse("X2"));
    w.emplace(3, Word::parse("x1 x2"));
    w.emplace(-3, Word::parse("X1 X2"));
    w.emplace(4, Word::parse("x1 X2"));
    w.emplace(-4, Word::parse("X1 x2"));
    w.emplace(5, Word::parse("x1 x2 X1 X2"));
    w.emplace(-5, Word::parse("x2 x1 X2 X1"));
    return w;
  }();
  auto it = words.find(i);
  if (it == words.end())
    throw DomainError("coordinate_word: no coordinate with index " + std::to_string(i));
  return it->second;
}

const Polynomial& poly_P() {
  static const Polynomial p = Polynomial::parse(
      "t1*t-1*t2*t-2 - t1*t2*t-3 - t-1*t-2*t3 - t1*t-2*t-4 - t-1*t2*t4"
      " + t1*t-1 + t2*t-2 + t3*t-3 + t4*t-4 - 3");
  return p;
}

const Polynomial& poly_Q() {
  // Term order follows the printed equation line by line.
  static const Polynomial q = Polynomial::parse(
      "9 - 6*t1*t-1 - 6*t2*t-2 - 6*t3*t-3 - 6*t4*t-4 + t1^3 + t2^3 + t3^3 + t4^3"
      " + t-1^3 + t-2^3 + t-3^3 + t-4^3 - 3*t-4*t-3*t-1 - 3*t4*t3*t1"
      " - 3*t-4*t2*t3 - 3*t4*t-2*t-3 + 3*t-4*t-2*t1 + 3*t4*t2*t-1"
      " + 3*t1*t2*t-3 + 3*t-1*t-2*t3 + t-2*t-1*t2*t1 + t-3*t-2*t3*t2"
      " + t-4*t-1*t4*t1 + t-4*t-2*t4*t2 + t-3*t-1*t3*t1"
      " + t-3*t-4*t3*t4 + t-4^2*t-3*t-2 + t4^2*t3*t2 + t-1^2*t-2*t-4 + t1^2*t2*t4"
      " + t1*t-2^2*t-3 + t-1*t2^2*t3 + t-4*t-3*t1^2 + t4*t3*t-1^2"
      " + t-4*t2*t-3^2 + t4*t-2*t3^2 + t-1^2*t-3*t2 + t1^2*t3*t-2"
      " + t-4*t1*t2^2 + t4*t-1*t-2^2 + t-4*t3*t-2^2 + t4*t-3*t2^2"
      " + t1*t3*t-4^2 + t-1*t-3*t4^2 + t-1*t-4*t3^2 + t1*t4*t-3^2 - 2*t-3^2*t-2*t-1"
      " - 2*t3^2*t2*t1 - 2*t-4^2*t-1*t2 - 2*t4^2*t1*t-2 + t-1^2*t-2^2*t-3 + t1^2*t2^2*t3"
      " + t-4*t-1^2*t2^2 + t4*t1^2*t-2^2 - t-4*t-2^2*t2*t1 - t4*t2^2*t-2*t-1"
      " - t-3*t1^2*t-1*t2 - t3*t-1^2*t1*t-2 - t-3*t2^2*t-2*t1 - t3*t-2^2*t2*t-1"
      " - t-4*t-2*t-1*t1^2 - t4*t2*t1*t-1^2 - t-1*t-2^3*t1 - t-1*t2^3*t1"
      " - t-1^3*t-2*t2 - t1^3*t-2*t2 - t-4*t-3*t-2*t-1*t2 - t4*t3*t2*t1*t-2"
      " - t-1*t1*t2*t-4*t3 - t-1*t1*t-2*t4*t-3 + t-2*t-1^2*t1^2*t2 + t-1*t-2^2*t2^2*t1");
  return q;
}

const Polynomial& sextic() {
  static const Polynomial s = T(5) * T(5) - poly_P() * T(5) + poly_Q();
  return s;
}

const Polynomial& branch_locus() {
  static const Polynomial b = poly_P() * poly_P() - 4 * poly_Q();
  return b;
}

const std::array<Word, 9>& lambda_basis() {
  static const std::array<Word, 9> basis = {
      Word::parse("x1"),    Word::parse("x2"),    Word::parse("X1"),
      Word::parse("X2"),    Word::parse("x1 x2"), Word::parse("x2 x1"),
      Word::parse("x1 X2"), Word::parse("X2 x1"), Word::parse("x2 X1")};
  return basis;
}

LambdaDecomposition lambda_det_decomposition(const RepPair<Rational>& pair) {
  const GeneratorPoint<Rational> pt = pi_map(pair);
  std::map<std::uint32_t, Rational> base;
  for (int i : {1, -1, 2, -2, 3, -3, 4, -4})
    base.emplace(Variable::t(i).code(), pt.at(i));

  // Each entry of the bilinear-form matrix, with the base coordinates
  // evaluated and the commutator trace kept formal: entry = a + b*T.
  const Variable t5 = Variable::t(5);
  std::array<std::array<std::pair<Rational, Rational>, 9>, 9> lin;
  for (int r = 0; r < 9; ++r) {
    const auto& ar = lambda_basis()[static_cast<std::size_t>(r)];
    const Rational tr_r = trace_of(ar, pair);
    for (int c = 0; c < 9; ++c) {
      const auto& ac = lambda_basis()[static_cast<std::size_t>(c)];
      const Polynomial red = reduce_trace_word(ar.concat(ac));
      const Rational a = red.coefficient_of(t5, 0).evaluate(base);
      const Polynomial b_poly = red.coefficient_of(t5, 1);
      const Rational b = b_poly.is_zero() ? Rational(0) : b_poly.evaluate(base);
      const Rational tr_c = trace_of(ac, pair);
      lin[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = {
          3 * a - tr_r * tr_c, 3 * b};
    }
  }

  auto det_at = [&lin](const Rational& tv) {
    Matrix m(9, std::vector<Rational>(9, Rational(0)));
    for (std::size_t r = 0; r < 9; ++r)
      for (std::size_t c = 0; c < 9; ++c)
        m[r][c] = lin[r][c].first + lin[r][c].second * tv;
    return bareiss_det(std::move(m));
  };

  const Rational d0 = det_at(Rational(0));
  const Rational d1 = det_at(Rational(1));
  const Rational d2 = det_at(Rational(2));
  LambdaDecomposition dec;
  dec.c0 = d0;
  dec.c2 = (d2 - 2 * d1 + d0) / Rational(2);
  dec.c1 = d1 - d0 - dec.c2;
  // The determinant must be quadratic in T (only two entries carry it);
  // confirm with a fourth evaluation.
  const Rational d3 = det_at(Rational(3));
  if (!(dec.c2 * 9 + dec.c1 * 3 + dec.c0 == d3))
    throw DomainError("lambda_det_decomposition: determinant is not quadratic in t(5)");
  return dec;
}

const std::map<int, Polynomial>& partials_P() {
  static const std::map<int, Polynomial> parts = [] {
    std::map<int, Polynomial> m;
    m.emplace(1, Polynomial::parse("-t-4*t-2 + t-1 - t-3*t2 + t-2*t-1*t2"));
    m.emplace(2, Polynomial::parse("t-2 - t-3*t1 + t-2*t-1*t1 - t-1*t4"));
    m.emplace(3, Polynomial::parse("t-3 - t-2*t-1"));
    m.emplace(4, Polynomial::parse("t-4 - t-1*t2"));
    m.emplace(-4, Polynomial::parse("-t-2*t1 + t4"));
    m.emplace(-3, Polynomial::parse("-t1*t2 + t3"));
    m.emplace(-2, Polynomial::parse("-t-4*t1 + t2 + t-1*t1*t2 - t-1*t3"));
    m.emplace(-1, Polynomial::parse("t1 + t-2*t1*t2 - t-2*t3 - t2*t4"));
    return m;
  }();
  return parts;
}

const std::map<int, Polynomial>& partials_Q() {
  static const std::map<int, Polynomial> parts = [] {
    std::map<int, Polynomial> m;
    m.emplace(1, Polynomial::parse(
                     "3*t-4*t-2 + t-3*t-2^2 - 6*t-1 - t-2^3*t-1 + 2*t-4*t-3*t1"
                     " - 2*t-4*t-2*t-1*t1 + 3*t1^2 + 3*t-3*t2 - t-4*t-2^2*t2"
                     " + t-2*t-1*t2 - 2*t-3*t-1*t1*t2 + 2*t-2*t-1^2*t1*t2"
                     " - 3*t-2*t1^2*t2 + t-4*t2^2 - t-3*t-2*t2^2 + t-2^2*t-1*t2^2"
                     " - t-1*t2^3 + t-4^2*t3 + t-3*t-1*t3 - t-2*t-1^2*t3"
                     " + 2*t-2*t1*t3 - t-4*t-1*t2*t3 + 2*t1*t2^2*t3 - 2*t2*t3^2"
                     " + t-3^2*t4 + t-4*t-1*t4 - t-3*t-2*t-1*t4 + 2*t-2^2*t1*t4"
                     " - t-1^2*t2*t4 + 2*t1*t2*t4 - 3*t3*t4 - t-2*t2*t3*t4"
                     " - 2*t-2*t4^2"));
    m.emplace(2, Polynomial::parse(
                     "t-4*t-3^2 - 6*t-2 - 2*t-4^2*t-1 - t-4*t-3*t-2*t-1"
                     " + t-3*t-1^2 - t-2*t-1^3 + 3*t-3*t1 - t-4*t-2^2*t1"
                     " + t-2*t-1*t1 - t-3*t-1*t1^2 + t-2*t-1^2*t1^2 - t-2*t1^3"
                     " + 2*t-4*t-1^2*t2 + 2*t-4*t1*t2 - 2*t-3*t-2*t1*t2"
                     " + 2*t-2^2*t-1*t1*t2 + 3*t2^2 - 3*t-1*t1*t2^2 - 3*t-4*t3"
                     " + t-3*t-2*t3 - t-2^2*t-1*t3 - t-4*t-1*t1*t3 + 2*t-1*t2*t3"
                     " + 2*t1^2*t2*t3 - 2*t1*t3^2 + t-4*t-2*t4 + 3*t-1*t4"
                     " - t-1^2*t1*t4 + t1^2*t4 + 2*t-3*t2*t4 - 2*t-2*t-1*t2*t4"
                     " - t-2*t1*t3*t4 + t3*t4^2"));
    m.emplace(3, Polynomial::parse(
                     "-6*t-3 + t-4*t-2^2 + 3*t-2*t-1 + t-4^2*t1 + t-3*t-1*t1"
                     " - t-2*t-1^2*t1 + t-2*t1^2 - 3*t-4*t2 + t-3*t-2*t2"
                     " - t-2^2*t-1*t2 - t-4*t-1*t1*t2 + t-1*t2^2 + t1^2*t2^2"
                     " + 2*t-4*t-1*t3 - 4*t1*t2*t3 + 3*t3^2 + t-4*t-3*t4"
                     " + t-1^2*t4 - 3*t1*t4 - t-2*t1*t2*t4 + 2*t-2*t3*t4"
                     " + t2*t4^2"));
    m.emplace(4, Polynomial::parse(
                     "-6*t-4 - 3*t-3*t-2 + t-2^2*t-1 + t-3^2*t1 + t-4*t-1*t1"
                     " - t-3*t-2*t-1*t1 + t-2^2*t1^2 + t-4*t-2*t2 + 3*t-1*t2"
                     " - t-1^2*t1*t2 + t1^2*t2 + t-3*t2^2 - t-2*t-1*t2^2"
                     " + t-4*t-3*t3 + t-1^2*t3 - 3*t1*t3 - t-2*t1*t2*t3"
                     " + t-2*t3^2 + 2*t-3*t-1*t4 - 4*t-2*t1*t4 + 2*t2*t3*t4"
                     " + 3*t4^2"));
    // dQ/dt(-k) is the subscript negation of dQ/dt(k).
    for (int k : {1, 2, 3, 4})
      m.emplace(-k, m.at(k).map_trace_indices(negation_map()));
    return m;
  }();
  return parts;
}

const std::vector<Polynomial>& jacobian_generators() {
  static const std::vector<Polynomial> gens = [] {
    std::vector<Polynomial> g;
    for (int i : {1, -1, 2, -2, 3, -3, 4, -4})
      g.push_back(T(5) * partials_P().at(i) * Rational(-1) + partials_Q().at(i));
    g.push_back(2 * T(5) - poly_P());
    return g;
  }();
  return gens;
}

const std::map<std::uint32_t, Polynomial>& sl2_bindings() {
  static const std::map<std::uint32_t, Polynomial> bind = [] {
    // Everything is rewritten over t(1), t(2), t(3) so one simultaneous
    // substitution eliminates all bound variables.
    const Polynomial t4 = Polynomial::parse("t1*t2 - t3 - t1 - t2 + 3");
    const Polynomial t5 = Polynomial::parse(
        "3 - 3*t1 + t1^2 - 3*t2 + t1*t2 + t2^2 - 3*t3 + t1*t3 + t2*t3"
        " - t1*t2*t3 + t3^2");
    std::map<std::uint32_t, Polynomial> b;
    b.emplace(Variable::t(-1).code(), T(1));
    b.emplace(Variable::t(-2).code(), T(2));
    b.emplace(Variable::t(-3).code(), T(3));
    b.emplace(Variable::t(4).code(), t4);
    b.emplace(Variable::t(-4).code(), t4);
    b.emplace(Variable::t(5).code(), t5);
    b.emplace(Variable::t(-5).code(), t5);
    return b;
  }();
  return bind;
}

Polynomial apply_dihedral(const DihedralElement& g, const Polynomial& f) {
  Polynomial out = f.map_trace_indices(g.perm);
  if (g.flips_t5 &&
      (out.contains(Variable::t(5)) || out.contains(Variable::t(-5)))) {
    std::map<std::uint32_t, Polynomial> bind;
    bind.emplace(Variable::t(5).code(), poly_P() - T(5));
    bind.emplace(Variable::t(-5).code(), T(5));
    out = out.substitute(bind);
  }
  return out;
}

Polynomial symmetrizer(const Polynomial& f) {
  if (f.contains(Variable::t(5)) || f.contains(Variable::t(-5)))
    throw VariableOutOfSubring("symmetrizer: argument must avoid t(5), t(-5)");
  Polynomial acc;
  for (const DihedralElement& g : dihedral_group()) acc += apply_dihedral(g, f);
  return acc;
}

const Polynomial& symmetrizer_seed_p() {
  static const Polynomial p =
      Polynomial::parse("t1*t-1*t2*t-2 - 4*t1*t-2*t-4 + 2*t1*t-1 + 2*t3*t-3") /
      Rational(8);
  return p;
}

const Polynomial& symmetrizer_seed_q() {
  static const Polynomial q =
      Polynomial::parse(
          "2*t-2*t-1^2*t1^2*t2 + 4*t1^2*t2^2*t3 - 4*t1^3*t-2*t2"
          " - 8*t-4*t-2*t-1*t1^2 - 4*t4*t3*t2*t1*t-2 + 8*t1*t3*t-4^2"
          " + 8*t-4*t1*t2^2 - 8*t3^2*t2*t1 + 4*t4*t-3*t2^2 + t-2*t-1*t2*t1"
          " + t-3*t-4*t3*t4 + 4*t-3*t-1*t3*t1 + 4*t1^3 + 4*t3^3"
          " + 12*t-4*t-2*t1 - 12*t-4*t2*t3 - 12*t1*t-1 - 12*t3*t-3") /
      Rational(8);
  return q;
}

Z3Weight grading_weight(const Monomial& m) {
  Z3Weight w{0, 0};
  for (const auto& [code, exp] : m.factors()) {
    const Variable v = Variable::from_code(code);
    if (!v.is_trace_coordinate())
      throw VariableOutOfSubring("grading_weight: monomial contains " + v.str());
    w = z3_add(w, z3_scale(coordinate_grading(v.trace_index()),
                           static_cast<int>(exp % 3)));
  }
  return w;
}

std::optional<Z3Weight> is_homogeneous(const Polynomial& f) {
  std::optional<Z3Weight> weight;
  for (const auto& [m, c] : f.terms()) {
    const Z3Weight w = grading_weight(m);
    if (!weight) {
      weight = w;
    } else if (!(*weight == w)) {
      return std::nullopt;
    }
  }
  if (!weight) return Z3Weight{0, 0};
  return weight;
}

}  // namespace charvar
