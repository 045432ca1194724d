#include "charvar/reduce.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "charvar/errors.hpp"
#include "charvar/linsolve.hpp"
#include "charvar/mat3.hpp"
#include "charvar/sampling.hpp"

namespace charvar {
namespace {

// The nine designated generator classes, keyed by canonical cyclic word.
const std::map<Word, int>& coordinate_classes() {
  static const std::map<Word, int> table = [] {
    std::map<Word, int> t;
    auto put = [&t](const char* w, int i) {
      t.emplace(cyclic_reduce(Word::parse(w)), i);
    };
    put("x1", 1);
    put("X1", -1);
    put("x2", 2);
    put("X2", -2);
    put("x1 x2", 3);
    put("X1 X2", -3);
    put("x1 X2", 4);
    put("X1 x2", -4);
    put("x1 x2 X1 X2", 5);
    return t;
  }();
  return table;
}

// Weighted length of the defining word of t(i).
long coordinate_weight(int i) {
  switch (i) {
    case 1:
    case 2:
      return 1;
    case -1:
    case -2:
      return 2;
    case 3:
      return 2;
    case -3:
      return 4;
    case 4:
    case -4:
      return 3;
    case 5:
    case -5:
      return 6;
    default:
      return 0;
  }
}

std::mutex g_power_mutex;
std::map<Word, Polynomial>& power_memo() {
  static std::map<Word, Polynomial> memo;
  return memo;
}

std::mutex g_symbol_mutex;
std::map<Word, Polynomial>& symbol_memo() {
  static std::map<Word, Polynomial> memo;
  return memo;
}

std::mutex g_word_mutex;
std::map<Word, Polynomial>& word_memo() {
  static std::map<Word, Polynomial> memo;
  return memo;
}

template <typename Map>
bool memo_find(std::mutex& mu, Map& memo, const Word& key, Polynomial* out) {
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(key);
  if (it == memo.end()) return false;
  *out = it->second;
  return true;
}

template <typename Map>
void memo_store(std::mutex& mu, Map& memo, const Word& key, const Polynomial& val) {
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(key, val);
}

}  // namespace

Polynomial trace_symbol_poly(const Word& w) {
  const Word c = cyclic_reduce(w);
  if (c.is_identity()) return Polynomial(3);
  if (c.rank() == 2) {
    const auto& coords = coordinate_classes();
    if (auto it = coords.find(c); it != coords.end()) return T(it->second);
  }
  return Polynomial(Variable::trace_symbol(c));
}

long variable_trace_weight(Variable v) {
  if (v.is_trace_coordinate()) return coordinate_weight(v.trace_index());
  if (v.is_trace_symbol()) return weighted_length(v.symbol_word());
  return 0;
}

TraceExpression TraceExpression::from_word(const Word& w) {
  TraceExpression e;
  e.add_term(w, Polynomial(1));
  return e;
}

TraceExpression TraceExpression::from_poly(const Polynomial& p, int rank) {
  TraceExpression e;
  e.add_term(Word(rank), p);
  return e;
}

void TraceExpression::add_term(const Word& w, const Polynomial& coeff) {
  if (coeff.is_zero()) return;
  const Word key = free_reduce(w);
  auto [it, inserted] = terms_.emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TraceExpression TraceExpression::operator+(const TraceExpression& o) const {
  TraceExpression r = *this;
  for (const auto& [w, p] : o.terms_) r.add_term(w, p);
  return r;
}

TraceExpression TraceExpression::operator-(const TraceExpression& o) const {
  TraceExpression r = *this;
  for (const auto& [w, p] : o.terms_) r.add_term(w, -p);
  return r;
}

TraceExpression TraceExpression::operator*(const TraceExpression& o) const {
  TraceExpression r;
  for (const auto& [w1, p1] : terms_)
    for (const auto& [w2, p2] : o.terms_) r.add_term(w1.concat(w2), p1 * p2);
  return r;
}

TraceExpression TraceExpression::operator*(const Polynomial& c) const {
  TraceExpression r;
  for (const auto& [w, p] : terms_) r.add_term(w, p * c);
  return r;
}

Polynomial TraceExpression::trace() const {
  Polynomial acc;
  for (const auto& [w, p] : terms_) acc += p * trace_symbol_poly(w);
  return acc;
}

std::pair<long, long> degree_bounds(const TraceExpression& e) {
  if (e.is_zero()) return {-1, -1};
  long deg = 0;
  long tdeg = 0;
  for (const auto& [w, p] : e.terms()) {
    deg = std::max(deg, weighted_length(w));
    for (Variable v : p.variables())
      tdeg = std::max(tdeg, variable_trace_weight(v));
  }
  return {deg, tdeg};
}

TraceExpression pol_symbolic(const Word& x, const Word& y) {
  const Word x2w = free_reduce(x.concat(x));
  const Word xy = free_reduce(x.concat(y));
  const Word yx = free_reduce(y.concat(x));
  const Word yx2 = free_reduce(y.concat(x2w));
  const Polynomial tx = trace_symbol_poly(x);
  const Polynomial ty = trace_symbol_poly(y);
  const Polynomial tx2 = trace_symbol_poly(x2w);
  const Polynomial txy = trace_symbol_poly(xy);
  const Rational half(1, 2);

  TraceExpression e;
  e.add_term(x2w, ty);
  e.add_term(yx, tx);
  e.add_term(xy, tx);
  e.add_term(x, txy - tx * ty);
  e.add_term(y, (tx2 - tx * tx) * half);
  e.add_term(Word(x.rank()), trace_symbol_poly(yx2) + tx * txy +
                                 (ty * tx * tx - ty * tx2) * half);
  return e;
}

std::vector<Word> classify_generators(int r) {
  if (r < 1) throw DomainError("classify_generators: rank must be >= 1");
  // Sign patterns of the printed shape families, in printed order.
  static const std::vector<std::vector<int>> kShapes = {
      {1},           {-1},         {1, 1},        {1, 1, 1},
      {1, -1},       {-1, -1},     {1, 1, -1},    {1, 1, 1, 1},
      {1, 1, 1, 1, 1},             {1, 1, 1, -1}, {1, -1, -1},
      {-1, -1, -1},  {1, 1, -1, -1},              {1, -1, 1, -1},
      {1, 1, 1, 1, -1},            {1, 1, 1, 1, 1, 1},
  };

  std::set<Word> seen;
  for (const auto& shape : kShapes) {
    const std::size_t k = shape.size();
    std::vector<int> idx(k, 1);
    for (;;) {
      Word w(r);
      for (std::size_t p = 0; p < k; ++p) w.append(idx[p], shape[p]);
      const Word c = cyclic_reduce(w);
      bool flat = !c.is_identity();
      for (const Letter& l : c.letters())
        if (l.exponent != 1 && l.exponent != -1) flat = false;
      if (flat) seen.insert(c);
      // Odometer over index tuples in [1, r]^k.
      std::size_t p = 0;
      while (p < k && ++idx[p] > r) idx[p++] = 1;
      if (p == k) break;
    }
  }

  std::vector<Word> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    const long wa = weighted_length(a), wb = weighted_length(b);
    if (wa != wb) return wa < wb;
    return a < b;
  });
  return out;
}

Polynomial reduce_power_word(const Word& w) {
  const Word c = cyclic_reduce(w);
  Polynomial cached;
  if (memo_find(g_power_mutex, power_memo(), c, &cached)) return cached;

  // Find a syllable with |exponent| >= 2; if none, the word is flat.
  const auto& ls = c.letters();
  std::size_t k = ls.size();
  for (std::size_t p = 0; p < ls.size(); ++p)
    if (std::abs(ls[p].exponent) >= 2) {
      k = p;
      break;
    }

  Polynomial result;
  if (k == ls.size()) {
    result = trace_symbol_poly(c);
  } else {
    // Rotate the powered syllable to the end: c ~ u * x^e cyclically, where
    // u's first and last syllables use other generators (adjacent syllables
    // of a canonical cyclic word always differ in index, including around
    // the wrap).
    const int gen = ls[k].index;
    const int e = ls[k].exponent;
    Word u(c.rank());
    for (std::size_t p = k + 1; p < ls.size(); ++p) u.append(ls[p].index, ls[p].exponent);
    for (std::size_t p = 0; p < k; ++p) u.append(ls[p].index, ls[p].exponent);

    auto tail = [&](int exp) {
      Word t = u;
      if (exp != 0) t.append(gen, exp);
      // Recursion terminates: the pair (sum of (|exponent|-1) over
      // syllables, total letter count) drops lexicographically in every
      // branch, counting the cyclic re-merging the recursive call performs.
      return reduce_power_word(t);
    };

    Word g(c.rank());
    g.append(gen, 1);
    const Polynomial tg = trace_symbol_poly(g);
    const Polynomial tgi = trace_symbol_poly(invert(g));
    if (e >= 2) {
      // tr(u x^e) = tr(x) tr(u x^{e-1}) - tr(x^-1) tr(u x^{e-2}) + tr(u x^{e-3}).
      result = tg * tail(e - 1) - tgi * tail(e - 2) + tail(e - 3);
    } else {
      // Same recursion read through x^-1, for e <= -2.
      result = tgi * tail(e + 1) - tg * tail(e + 2) + tail(e + 3);
    }
  }

  memo_store(g_power_mutex, power_memo(), c, result);
  return result;
}

Polynomial reduce_power_poly(const Polynomial& p) {
  std::map<std::uint32_t, Polynomial> bind;
  for (Variable v : p.variables()) {
    if (!v.is_trace_symbol()) continue;
    const Word& s = v.symbol_word();
    bool flat = true;
    for (const Letter& l : s.letters())
      if (l.exponent != 1 && l.exponent != -1) flat = false;
    if (!flat) bind.emplace(v.code(), reduce_power_word(s));
  }
  return bind.empty() ? p : p.substitute(bind);
}

TraceExpression reduce_power(const TraceExpression& e) {
  TraceExpression r;
  for (const auto& [w, p] : e.terms()) r.add_term(w, reduce_power_poly(p));
  return r;
}

const std::map<Word, Polynomial>& reduction_rule_table() {
  static const std::map<Word, Polynomial> table = [] {
    std::map<Word, Polynomial> t;
    auto put = [&t](const char* w, const char* p) {
      t.emplace(cyclic_reduce(Word::parse(w)), Polynomial::parse(p));
    };
    // Squares of the two-letter classes that stay within weighted length 6.
    put("x1 x2 x1 x2", "t3^2 - 2*t-3");
    put("x1 X2 x1 X2", "t4^2 - 2*t-4");
    put("X1 x2 X1 x2", "t-4^2 - 2*t4");
    // The two mixed four-letter classes of weighted length 5 (the cyclic
    // classes of (x1x2)^2 x2^-2 and (x2x1)^2 x1^-2).
    put("x1 x2 x1 X2", "t3*t4 + t2*t-3 + t-2*t-4 - t-1*t2*t-2 + t-1");
    put("x1 x2 X1 x2", "t3*t-4 + t1*t-3 + t-1*t4 - t1*t-1*t-2 + t-2");
    // The inverse commutator: P - t5.
    put("x1 X2 X1 x2",
        "t1*t-1*t2*t-2 - t1*t2*t-3 - t-1*t-2*t3 - t1*t-2*t-4 - t-1*t2*t4"
        " + t1*t-1 + t2*t-2 + t3*t-3 + t4*t-4 - 3 - t5");
    // The only six-letter class of weighted length 6.
    put("x1 x2 x1 x2 x1 x2", "t3^3 - 3*t3*t-3 + 3");
    return t;
  }();
  return table;
}

namespace {

Polynomial interpolate_with_schedule(const Word& s) {
  static const int kBounds[] = {2, 4, 6};
  std::string last = "no bound attempted";
  for (int b : kBounds) {
    try {
      return reduce_by_interpolation(s, b);
    } catch (const BasisInsufficient& err) {
      last = err.what();
    } catch (const RankDeficient& err) {
      last = err.what();
    }
  }
  throw ReductionFailed("reduce_trace_word: could not certify a reduction of '" +
                        s.str() + "' (" + last + ")");
}

// Table lookup with certified-interpolation fallback for a flat symbol word.
Polynomial reduced_symbol(const Word& s) {
  const auto& table = reduction_rule_table();
  if (auto it = table.find(s); it != table.end()) return it->second;
  Polynomial cached;
  if (memo_find(g_symbol_mutex, symbol_memo(), s, &cached)) return cached;
  const Polynomial q = interpolate_with_schedule(s);
  memo_store(g_symbol_mutex, symbol_memo(), s, q);
  return q;
}

}  // namespace

Polynomial reduce_trace_word(const Word& w) {
  if (w.rank() > 2)
    throw RankUnsupported("reduce_trace_word: rank 2 words only");
  const Word c = cyclic_reduce(w);
  Polynomial cached;
  if (memo_find(g_word_mutex, word_memo(), c, &cached)) return cached;

  const Polynomial flat = reduce_power_word(c);
  std::map<std::uint32_t, Polynomial> bind;
  for (Variable v : flat.variables())
    if (v.is_trace_symbol()) bind.emplace(v.code(), reduced_symbol(v.symbol_word()));
  const Polynomial result = bind.empty() ? flat : flat.substitute(bind);

  memo_store(g_word_mutex, word_memo(), c, result);
  return result;
}

Polynomial reduce_by_interpolation(const Word& w, int degree_bound) {
  if (degree_bound < 1)
    throw DomainError("reduce_by_interpolation: degree_bound must be >= 1");
  if (w.rank() > 2)
    throw RankUnsupported("reduce_by_interpolation: rank 2 words only");
  const Word c = cyclic_reduce(w);
  const Z3Weight target = z3_weight(c);
  const long wl_cap = std::max(weighted_length(c), 6L);

  // The eight base coordinates with their grading weights and the weighted
  // lengths of their defining words.
  static const std::array<int, 8> kIdx = {1, -1, 2, -2, 3, -3, 4, -4};
  static const std::array<Z3Weight, 8> kWeight = {
      Z3Weight{1, 0}, Z3Weight{2, 0}, Z3Weight{0, 1}, Z3Weight{0, 2},
      Z3Weight{1, 1}, Z3Weight{2, 2}, Z3Weight{1, 2}, Z3Weight{2, 1}};

  struct Col {
    Monomial m;
    bool with_t5;
  };
  std::vector<Col> cols;
  std::array<unsigned, 8> exps{};
  auto emit = [&]() {
    Z3Weight wt{0, 0};
    long wl = 0;
    Monomial m;
    for (std::size_t i = 0; i < 8; ++i) {
      if (!exps[i]) continue;
      wt = z3_add(wt, z3_scale(kWeight[i], static_cast<int>(exps[i])));
      wl += static_cast<long>(exps[i]) * coordinate_weight(kIdx[i]);
      m = m * Monomial(Variable::t(kIdx[i]), exps[i]);
    }
    if (!(wt == target)) return;
    if (wl <= wl_cap) cols.push_back({m, false});
    // t(5) carries grading weight (0,0) and weighted length 6.
    if (wl + 6 <= wl_cap) cols.push_back({m, true});
  };
  auto rec = [&](auto&& self, std::size_t pos, int deg_left, long wl_left) -> void {
    if (pos == 8) {
      emit();
      return;
    }
    const long vw = coordinate_weight(kIdx[pos]);
    for (unsigned e = 0;; ++e) {
      if (static_cast<int>(e) > deg_left || static_cast<long>(e) * vw > wl_left) break;
      exps[pos] = e;
      self(self, pos + 1, deg_left - static_cast<int>(e),
           wl_left - static_cast<long>(e) * vw);
    }
    exps[pos] = 0;
  };
  rec(rec, 0, degree_bound, wl_cap);

  if (cols.empty())
    throw BasisInsufficient("reduce_by_interpolation: empty basis at bound " +
                            std::to_string(degree_bound));

  // Deterministic column order.
  std::sort(cols.begin(), cols.end(), [](const Col& a, const Col& b) {
    if (a.with_t5 != b.with_t5) return !a.with_t5;
    return a.m.graded_less(b.m);
  });

  static const std::array<int, 9> kAllCoords = {1, -1, 2, -2, 3, -3, 4, -4, 5};
  const auto& coord_word = [](int i) -> const Word& {
    static const std::map<int, Word> words = [] {
      std::map<int, Word> ws;
      for (const auto& [word, idx] : coordinate_classes()) ws.emplace(idx, word);
      return ws;
    }();
    return words.at(i);
  };

  auto eval_point = [&](const RepPair<Rational>& pair) {
    std::map<std::uint32_t, Rational> point;
    for (int i : kAllCoords)
      point.emplace(Variable::t(i).code(), trace_of(coord_word(i), pair));
    return point;
  };
  auto column_value = [&](const Col& col,
                          const std::map<std::uint32_t, Rational>& point) {
    Rational v(1);
    for (const auto& [code, exp] : col.m.factors())
      v *= point.at(code).pow(exp);
    if (col.with_t5) v *= point.at(Variable::t(5).code());
    return v;
  };

  // Seed stream derived from the word and bound, so results are
  // reproducible; certification makes them sample-independent anyway.
  std::uint64_t base = 0x9e3779b97f4a7c15ULL ^
                       (static_cast<std::uint64_t>(degree_bound) << 32);
  for (char ch : c.str())
    base = (base ^ static_cast<unsigned char>(ch)) * 1099511628211ULL;

  const std::size_t n = cols.size();
  for (int attempt = 0; attempt < 4; ++attempt) {
    SplitMix64 seeds(base + static_cast<std::uint64_t>(attempt) * 0x51ed270b9ULL);
    Matrix a(n, std::vector<Rational>(n, Rational(0)));
    std::vector<Rational> b(n, Rational(0));
    for (std::size_t row = 0; row < n; ++row) {
      const RepPair<Rational> pair = sample_sl3z(seeds.next());
      const auto point = eval_point(pair);
      for (std::size_t col = 0; col < n; ++col) a[row][col] = column_value(cols[col], point);
      b[row] = trace_of(c, pair);
    }
    const FractionFreeSolver solver(std::move(a));
    if (solver.singular()) continue;
    const std::vector<Rational> x = solver.solve(std::move(b));

    Polynomial cand;
    for (std::size_t col = 0; col < n; ++col) {
      if (x[col].is_zero()) continue;
      Monomial m = cols[col].m;
      if (cols[col].with_t5) m = m * Monomial(Variable::t(5));
      cand.add_term(m, x[col]);
    }

    // Certification: exact agreement on 2n fresh held-out pairs.  The basis
    // monomials are linearly independent as functions on the variety, so a
    // certified fit is the unique reduction.
    bool ok = true;
    for (std::size_t trial = 0; trial < 2 * n && ok; ++trial) {
      const RepPair<Rational> pair = sample_sl3z(seeds.next());
      const auto point = eval_point(pair);
      if (!(cand.evaluate(point) == trace_of(c, pair))) ok = false;
    }
    if (!ok)
      throw BasisInsufficient(
          "reduce_by_interpolation: certification failed for '" + c.str() +
          "' at bound " + std::to_string(degree_bound));
    return cand;
  }
  throw RankDeficient(
      "reduce_by_interpolation: sample matrix stayed singular for '" +
      c.str() + "' at bound " + std::to_string(degree_bound));
}

}  // namespace charvar
