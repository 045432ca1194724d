#include "charvar/word.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

namespace charvar {

Word::Word(int rank, std::vector<Letter> letters) : Word(rank) {
  for (const Letter& l : letters) append(l.index, l.exponent);
}

Word& Word::append(int index, int exponent) {
  if (index < 1 || index > rank_) throw DomainError("Word: letter index out of rank");
  if (exponent == 0) throw DomainError("Word: zero exponent");
  letters_.push_back({index, exponent});
  return *this;
}

Word Word::concat(const Word& other) const {
  if (other.rank_ != rank_) throw DomainError("Word: rank mismatch in concat");
  Word r(rank_);
  r.letters_ = letters_;
  r.letters_.insert(r.letters_.end(), other.letters_.begin(), other.letters_.end());
  return r;
}

Word Word::pow(int n) const {
  Word base = n < 0 ? invert(*this) : *this;
  int m = n < 0 ? -n : n;
  Word r(rank_);
  for (int i = 0; i < m; ++i) r = r.concat(base);
  return free_reduce(r);
}

std::strong_ordering Word::operator<=>(const Word& o) const {
  if (auto c = rank_ <=> o.rank_; c != 0) return c;
  const std::size_t n = std::min(letters_.size(), o.letters_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = letters_[i].index <=> o.letters_[i].index; c != 0) return c;
    if (auto c = letters_[i].exponent <=> o.letters_[i].exponent; c != 0) return c;
  }
  return letters_.size() <=> o.letters_.size();
}

Word free_reduce(const Word& w) {
  Word r(w.rank());
  std::vector<Letter> stack;
  for (const Letter& l : w.letters()) {
    if (!stack.empty() && stack.back().index == l.index) {
      stack.back().exponent += l.exponent;
      if (stack.back().exponent == 0) stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  for (const Letter& l : stack) r.append(l.index, l.exponent);
  return r;
}

namespace {

// Expanded atom: (index, sign). Order: index ascending, + before -.
struct Atom {
  int index;
  int sign;
  friend bool operator==(const Atom&, const Atom&) = default;
  friend bool operator<(const Atom& x, const Atom& y) {
    if (x.index != y.index) return x.index < y.index;
    return x.sign > y.sign;  // +1 before -1
  }
};

std::vector<Atom> expand(const Word& w) {
  std::vector<Atom> out;
  for (const Letter& l : w.letters()) {
    const int s = l.exponent > 0 ? 1 : -1;
    for (int k = 0; k < std::abs(l.exponent); ++k) out.push_back({l.index, s});
  }
  return out;
}

Word merge_atoms(int rank, const std::vector<Atom>& atoms) {
  Word r(rank);
  std::vector<Letter> ls;
  for (const Atom& a : atoms) {
    if (!ls.empty() && ls.back().index == a.index &&
        ((ls.back().exponent > 0) == (a.sign > 0))) {
      ls.back().exponent += a.sign;
    } else {
      ls.push_back({a.index, a.sign});
    }
  }
  for (const Letter& l : ls) r.append(l.index, l.exponent);
  return r;
}

}  // namespace

Word cyclic_reduce(const Word& w) {
  std::vector<Atom> a = expand(free_reduce(w));
  // Strip inverse pairs at the two ends (conjugation).
  std::size_t lo = 0, hi = a.size();
  while (hi - lo >= 2 && a[lo].index == a[hi - 1].index && a[lo].sign == -a[hi - 1].sign) {
    ++lo;
    --hi;
  }
  std::vector<Atom> core(a.begin() + static_cast<std::ptrdiff_t>(lo),
                         a.begin() + static_cast<std::ptrdiff_t>(hi));
  if (core.empty()) return Word(w.rank());
  // Lexicographically least rotation.
  const std::size_t n = core.size();
  std::size_t best = 0;
  for (std::size_t cand = 1; cand < n; ++cand) {
    for (std::size_t k = 0; k < n; ++k) {
      const Atom& x = core[(cand + k) % n];
      const Atom& y = core[(best + k) % n];
      if (x == y) continue;
      if (x < y) best = cand;
      break;
    }
  }
  std::vector<Atom> rot;
  rot.reserve(n);
  for (std::size_t k = 0; k < n; ++k) rot.push_back(core[(best + k) % n]);
  return merge_atoms(w.rank(), rot);
}

Word invert(const Word& w) {
  Word r(w.rank());
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) r.append(it->index, -it->exponent);
  return r;
}

long weighted_length(const Word& w) {
  long total = 0;
  for (const Letter& l : free_reduce(w).letters()) {
    total += l.exponent > 0 ? l.exponent : -2L * l.exponent;
  }
  return total;
}

Z3Weight z3_weight(const Word& w) {
  if (w.rank() != 2) throw RankUnsupported("z3_weight: defined for rank 2 only");
  // Deleting the other generator and weighting mod 3 equals the exponent sum
  // mod 3: a letter with exponent e contributes e (if e>0) or 2|e| = -2e = e
  // (mod 3) when e < 0.
  long s1 = 0, s2 = 0;
  for (const Letter& l : w.letters()) (l.index == 1 ? s1 : s2) += l.exponent;
  return {static_cast<int>(((s1 % 3) + 3) % 3), static_cast<int>(((s2 % 3) + 3) % 3)};
}

Word Word::parse(const std::string& text, int rank) {
  Word w(rank);
  std::size_t i = 0;
  const auto fail = [&](const std::string& what) {
    std::ostringstream os;
    os << "word parse error at offset " << i << ": " << what;
    throw ParseError(os.str());
  };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const char c = text[i];
    if (c != 'x' && c != 'X') fail("expected letter x<k> or X<k>");
    const int sign = c == 'x' ? 1 : -1;
    ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      fail("expected generator index");
    int index = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      index = index * 10 + (text[i++] - '0');
    int power = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      int psign = 1;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        if (text[i] == '-') psign = -1;
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        fail("expected exponent digits after ^");
      power = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        power = power * 10 + (text[i++] - '0');
      if (power == 0) fail("zero exponent");
      power *= psign;
    }
    if (index < 1 || index > rank) fail("generator index out of rank");
    w.append(index, sign * power);
  }
  return free_reduce(w);
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const Letter& l : letters_) {
    if (!first) os << ' ';
    first = false;
    os << (l.exponent > 0 ? 'x' : 'X') << l.index;
    const int m = std::abs(l.exponent);
    if (m != 1) os << '^' << m;
  }
  return os.str();
}

Word apply_endomorphism(const Word& w, const std::vector<Word>& images) {
  if (static_cast<int>(images.size()) != w.rank())
    throw DomainError("apply_endomorphism: one image per generator required");
  int rank = 1;
  for (const Word& im : images) rank = std::max(rank, im.rank());
  Word out(rank);
  for (const Letter& l : w.letters()) out = out.concat(images[l.index - 1].pow(l.exponent));
  return free_reduce(out);
}

namespace {
std::mutex g_intern_mutex;
std::map<Word, std::uint32_t>& intern_index() {
  static std::map<Word, std::uint32_t> m;
  return m;
}
std::vector<Word>& intern_list() {
  static std::vector<Word> v;
  return v;
}
}  // namespace

std::uint32_t intern_trace_word(const Word& canonical_cyclic) {
  std::lock_guard<std::mutex> lock(g_intern_mutex);
  auto& idx = intern_index();
  auto it = idx.find(canonical_cyclic);
  if (it != idx.end()) return it->second;
  const auto id = static_cast<std::uint32_t>(intern_list().size());
  intern_list().push_back(canonical_cyclic);
  idx.emplace(canonical_cyclic, id);
  return id;
}

const Word& trace_word(std::uint32_t id) {
  std::lock_guard<std::mutex> lock(g_intern_mutex);
  return intern_list().at(id);
}

}  // namespace charvar
