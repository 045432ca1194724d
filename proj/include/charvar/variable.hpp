#pragma once

#include <cstdint>
#include <string>

#include "charvar/errors.hpp"
#include "charvar/word.hpp"

namespace charvar {

// A polynomial variable, packed into a 32-bit code.
//
//   0..9    trace coordinates t1, t-1, t2, t-2, t3, t-3, t4, t-4, t5, t-5
//   10..12  eigenvalue symbols L1, L2, L3
//   13..16  scalar parameters s, t, a, c
//   32+k    trace symbol tr(w) for the interned cyclic word with id k
//
// Trace coordinates are ordered so that code ^ 1 negates the subscript.
class Variable {
 public:
  static constexpr std::uint32_t kTraceSymBase = 32;

  // Trace coordinate t(i), i in {±1,...,±5}.
  static Variable t(int i) {
    if (i == 0 || i > 5 || i < -5) throw DomainError("Variable::t: index out of range");
    const int k = i > 0 ? i : -i;
    return Variable(static_cast<std::uint32_t>(2 * (k - 1) + (i < 0 ? 1 : 0)));
  }
  static Variable lambda(int k) {
    if (k < 1 || k > 3) throw DomainError("Variable::lambda: index out of range");
    return Variable(static_cast<std::uint32_t>(9 + k));
  }
  static Variable param(char name) {
    switch (name) {
      case 's': return Variable(13);
      case 't': return Variable(14);
      case 'a': return Variable(15);
      case 'c': return Variable(16);
      default: throw DomainError("Variable::param: unknown parameter");
    }
  }
  // Formal symbol tr(w) for a cyclically reduced canonical word.
  static Variable trace_symbol(const Word& canonical_cyclic) {
    return Variable(kTraceSymBase + intern_trace_word(canonical_cyclic));
  }
  static Variable from_code(std::uint32_t code) { return Variable(code); }

  std::uint32_t code() const { return code_; }

  bool is_trace_coordinate() const { return code_ < 10; }
  bool is_lambda() const { return code_ >= 10 && code_ <= 12; }
  bool is_param() const { return code_ >= 13 && code_ <= 16; }
  bool is_trace_symbol() const { return code_ >= kTraceSymBase; }

  // For trace coordinates: the signed subscript i with t(i) == *this.
  int trace_index() const {
    if (!is_trace_coordinate()) throw DomainError("Variable::trace_index: not a trace coordinate");
    const int k = static_cast<int>(code_ / 2) + 1;
    return (code_ % 2) ? -k : k;
  }
  const Word& symbol_word() const {
    if (!is_trace_symbol()) throw DomainError("Variable::symbol_word: not a trace symbol");
    return trace_word(code_ - kTraceSymBase);
  }

  std::string str() const;

  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;

 private:
  explicit Variable(std::uint32_t code) : code_(code) {}
  std::uint32_t code_;
};

}  // namespace charvar
