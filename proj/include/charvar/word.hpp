// Free-group word algebra: free and cyclic reduction, inversion, weighted
// length, and the Z3 x Z3 grading weight for rank 2.
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "charvar/errors.hpp"

namespace charvar {

struct Letter {
  int index;     // generator index, 1-based
  int exponent;  // nonzero
  friend bool operator==(const Letter&, const Letter&) = default;
};

// A word in the free group of rank `rank`. Letters are syllables: adjacent
// letters with equal index are merged by free_reduce. The empty sequence is
// the identity.
class Word {
 public:
  Word() : rank_(2) {}
  explicit Word(int rank) : rank_(rank) {
    if (rank < 1) throw DomainError("Word: rank must be positive");
  }
  Word(int rank, std::vector<Letter> letters);

  int rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }

  // Number of syllables; |w| after expansion is sum of |exponent|.
  std::size_t syllables() const { return letters_.size(); }

  Word& append(int index, int exponent);
  Word concat(const Word& other) const;
  Word pow(int n) const;  // n may be negative

  friend bool operator==(const Word&, const Word&) = default;
  std::strong_ordering operator<=>(const Word& o) const;

  // Grammar: `x1` (exponent +1), `X1` (exponent -1), optional `^n` with n a
  // nonzero integer (sign allowed); juxtaposition concatenates; whitespace
  // ignored. Example: "x1^3 X2^2" is x1^3 x2^-2.
  static Word parse(const std::string& text, int rank = 2);
  std::string str() const;

 private:
  int rank_;
  std::vector<Letter> letters_;
};

Word free_reduce(const Word& w);

// Freely reduces, then strips conjugating prefix/suffix pairs. The result is
// the canonical representative of the cyclic class: the lexicographically
// least rotation of the fully expanded (+/-1 exponent) letter string, under
// letter order x1 < x1^-1 < x2 < x2^-1 < x3 < ...
Word cyclic_reduce(const Word& w);

Word invert(const Word& w);

// Positive exponents count once, negative twice: |x1^3 x2^-2|_w = 3 + 2*2.
// Requires w freely reduced (free_reduce is applied defensively).
long weighted_length(const Word& w);

// Rank-2 only. Component j is the weighted length of w with the other
// generator's letters deleted (then freely reduced), mod 3; equivalently the
// exponent sum of generator j mod 3.
struct Z3Weight {
  int a;  // weight of the x1 restriction, in {0,1,2}
  int b;  // weight of the x2 restriction, in {0,1,2}
  friend bool operator==(const Z3Weight&, const Z3Weight&) = default;
};
Z3Weight z3_weight(const Word& w);

inline Z3Weight z3_add(Z3Weight u, Z3Weight v) {
  return {(u.a + v.a) % 3, (u.b + v.b) % 3};
}
inline Z3Weight z3_scale(Z3Weight u, int k) {
  int m = ((k % 3) + 3) % 3;
  return {(u.a * m) % 3, (u.b * m) % 3};
}

// Applies the endomorphism sending each generator x_k to images[k-1]
// (and x_k^-1 to its inverse), then freely reduces. images.size() must equal
// w.rank(). The outer automorphisms iota (x1 -> x1^-1, x2 -> x2), tau
// (x1 <-> x2), and eta (x1 -> x1 x2, x2 -> x2) are all instances.
Word apply_endomorphism(const Word& w, const std::vector<Word>& images);

// Process-wide registry of canonical cyclic words backing TraceSym variables.
// Ids are assigned in interning order and are stable within a process.
std::uint32_t intern_trace_word(const Word& canonical_cyclic);
const Word& trace_word(std::uint32_t id);

}  // namespace charvar
