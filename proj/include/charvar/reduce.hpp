#pragma once

#include <map>
#include <utility>
#include <vector>

#include "charvar/polynomial.hpp"
#include "charvar/word.hpp"

namespace charvar {

// tr(w) as a polynomial: the constant 3 for the identity, the coordinate
// t(i) when the cyclic class of w is one of the nine designated generators
// (x1, x1^-1, x2, x2^-1, x1x2, x1^-1x2^-1, x1x2^-1, x1^-1x2, and the
// commutator x1x2x1^-1x2^-1 for t(5)), and otherwise the formal trace
// symbol of the canonical cyclic representative.
Polynomial trace_symbol_poly(const Word& w);

// Weighted length of the word a polynomial variable stands for: the symbol
// word for trace symbols, the defining word of t(i) for trace coordinates
// (|t(1)| = 1, |t(-1)| = 2, ..., |t(+-5)| = 6), zero for everything else.
long variable_trace_weight(Variable v);

// A formal linear combination of free-group words with coefficients that are
// polynomials in trace symbols and trace coordinates: the working
// representation for matrix-valued expressions of the trace calculus.  A
// scalar expression is one supported on the identity word alone.
class TraceExpression {
 public:
  TraceExpression() = default;  // zero

  static TraceExpression from_word(const Word& w);
  static TraceExpression from_poly(const Polynomial& p, int rank = 2);

  const std::map<Word, Polynomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Word& w, const Polynomial& coeff);

  TraceExpression operator+(const TraceExpression& o) const;
  TraceExpression operator-(const TraceExpression& o) const;
  // Word-by-word concatenation product (freely reducing each product word).
  TraceExpression operator*(const TraceExpression& o) const;
  TraceExpression operator*(const Polynomial& c) const;

  friend bool operator==(const TraceExpression&, const TraceExpression&) = default;

  // Formal trace: sum of coeff * tr(word) over the terms.
  Polynomial trace() const;

 private:
  std::map<Word, Polynomial> terms_;
};

// Upper bounds (degree, trace degree): the largest weighted length over the
// expression's words, and over the words behind trace factors inside its
// coefficients.  The zero expression reports (-1, -1).
std::pair<long, long> degree_bounds(const TraceExpression& e);

// pol(x, y) — the trace-coefficient form equal to yx^2 + x^2y + xyx — as a
// formal expression in the words x and y.
TraceExpression pol_symbolic(const Word& x, const Word& y);

// The printed generator shape families instantiated over indices 1..r:
// canonical cyclic forms, deduplicated, with the identity and any class
// whose canonical form keeps an exponent of magnitude >= 2 dropped (those
// reduce further by the power recursion).  Sorted by weighted length, then
// word order.  Every emitted class has weighted length <= 6.
std::vector<Word> classify_generators(int r);

// Rewrites tr(u x^n v) with |n| >= 2 via the three-term recursion (its
// mirror, conjugated through the inverse matrix, for n <= -2) until no
// trace symbol contains a letter with |exponent| >= 2.  Value-preserving on
// every unimodular pair.
Polynomial reduce_power_word(const Word& w);
// The same rewrite applied to every trace symbol in a polynomial.
Polynomial reduce_power_poly(const Polynomial& p);
// And to every coefficient of an expression (the word part is untouched).
TraceExpression reduce_power(const TraceExpression& e);

// Frozen rewrite table for the cyclic classes of weighted length <= 6 with
// +-1 exponents that are not already coordinates: the three squares
// (x1x2)^2, (x1x2^-1)^2, (x1^-1x2)^2, the two mixed four-letter classes,
// the inverse commutator, and (x1x2)^3.  Keys are canonical cyclic words.
const std::map<Word, Polynomial>& reduction_rule_table();

// Full pipeline: cyclic reduce -> power reduce -> rule table -> certified
// interpolation fallback.  Returns a polynomial in t(+-1..+-4), t(5) exactly
// equal to tr(w) on the representation variety.  Throws ReductionFailed when
// the fallback cannot certify at any scheduled degree bound; rank must be
// <= 2 (RankUnsupported).
Polynomial reduce_trace_word(const Word& w);

// Interpolation engine: fit tr(w) against the monomial basis
//   {m in t(+-1..+-4) : deg(m) <= degree_bound} x {1, t(5)},
// restricted to the z3-weight class of w and to the weighted-length
// filtration (monomials whose intrinsic weighted length exceeds
// max(|w|_w, 6) cannot occur), solved exactly on integer sample pairs and
// certified by exact equality on >= 2x basis-size held-out pairs.
// Throws BasisInsufficient when certification fails at this bound,
// RankDeficient when repeated sampling cannot produce a solvable system.
Polynomial reduce_by_interpolation(const Word& w, int degree_bound);

}  // namespace charvar
