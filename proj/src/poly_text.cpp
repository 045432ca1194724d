#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "charvar/polynomial.hpp"

namespace charvar {

Rational Rational::parse(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t j = text.size();
  while (j > i && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
  const std::string body = text.substr(i, j - i);
  if (body.empty()) throw ParseError("rational parse error: empty input");
  std::size_t k = 0;
  if (body[k] == '+' || body[k] == '-') ++k;
  bool digits = false, slash = false;
  for (; k < body.size(); ++k) {
    if (std::isdigit(static_cast<unsigned char>(body[k]))) {
      digits = true;
    } else if (body[k] == '/' && digits && !slash) {
      slash = true;
      digits = false;
    } else {
      throw ParseError("rational parse error: unexpected character in '" + body + "'");
    }
  }
  if (!digits) throw ParseError("rational parse error: missing digits in '" + body + "'");
  mpq_class q(body[0] == '+' ? body.substr(1) : body);
  if (q.get_den() == 0) throw DomainError("rational parse error: zero denominator");
  q.canonicalize();
  return Rational(q);
}

bool rational_cube_root(const Rational& q, Rational* root) {
  mpz_class num = q.numerator(), den = q.denominator();
  mpz_class rn, rd;
  const int exact_n = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), 3);
  const int exact_d = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), 3);
  if (!exact_n || !exact_d) return false;
  if (root) *root = Rational(mpq_class(rn, rd));
  return true;
}

std::string Variable::str() const {
  if (is_trace_coordinate()) {
    std::ostringstream os;
    os << 't' << trace_index();
    return os.str();
  }
  if (is_lambda()) {
    std::ostringstream os;
    os << 'L' << (code_ - 9);
    return os.str();
  }
  switch (code_) {
    case 13: return "s";
    case 14: return "t";
    case 15: return "a";
    case 16: return "c";
    default: break;
  }
  if (is_trace_symbol()) return "tr(" + symbol_word().str() + ")";
  throw DomainError("Variable::str: invalid code");
}

namespace {

std::string monomial_str(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [code, exp] : m.factors()) {
    if (!first) os << '*';
    first = false;
    os << Variable::from_code(code).str();
    if (exp > 1) os << '^' << exp;
  }
  return os.str();
}

}  // namespace

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = c.sign() < 0;
    const Rational mag = neg ? -c : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (m.is_unit()) {
      os << mag.str();
    } else {
      if (!mag.is_one()) os << mag.str() << '*';
      os << monomial_str(m);
    }
  }
  return os.str();
}

namespace {

// Recursive-descent parser for the textual polynomial syntax:
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*        '/' needs a constant divisor
//   factor := '-' factor | base ('^' nat)*
//   base   := integer | variable | '(' expr ')'
// Variables: t1 t-1 ... t5 t-5 (the '-' must be adjacent), L1 L2 L3, s t a c.
class PolyParser {
 public:
  explicit PolyParser(const std::string& text) : text_(text) {}

  Polynomial run() {
    Polynomial p = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << "polynomial parse error at offset " << pos_ << ": " << what;
    throw ParseError(os.str());
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  Polynomial parse_expr() {
    Polynomial acc = parse_term();
    for (;;) {
      if (eat('+')) {
        acc += parse_term();
      } else if (eat('-')) {
        acc -= parse_term();
      } else {
        return acc;
      }
    }
  }

  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    for (;;) {
      if (eat('*')) {
        acc *= parse_factor();
      } else if (eat('/')) {
        Polynomial d = parse_factor();
        if (!d.is_constant() || d.is_zero()) fail("divisor must be a nonzero constant");
        acc = acc / d.constant_term();
      } else {
        return acc;
      }
    }
  }

  Polynomial parse_factor() {
    if (eat('-')) return -parse_factor();
    Polynomial base = parse_base();
    while (eat('^')) {
      skip_ws();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected nonnegative integer exponent");
      unsigned e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        e = e * 10 + static_cast<unsigned>(text_[pos_++] - '0');
      base = base.pow(e);
    }
    return base;
  }

  Polynomial parse_base() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class n = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        n = n * 10 + (text_[pos_++] - '0');
      return Polynomial(Rational(mpq_class(n)));
    }
    if (c == 't') {
      // 't' adjacent to a digit, or to '-' then a digit, is a trace variable.
      if (pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        pos_ += 1;
        return Polynomial(Variable::t(parse_small_index()));
      }
      if (pos_ + 2 < text_.size() && text_[pos_ + 1] == '-' &&
          std::isdigit(static_cast<unsigned char>(text_[pos_ + 2]))) {
        pos_ += 2;
        return Polynomial(Variable::t(-parse_small_index()));
      }
      ++pos_;
      return Polynomial(Variable::param('t'));
    }
    if (c == 'L') {
      ++pos_;
      return Polynomial(Variable::lambda(parse_small_index()));
    }
    if (c == 's' || c == 'a' || c == 'c') {
      ++pos_;
      return Polynomial(Variable::param(c));
    }
    fail("expected number, variable, or '('");
  }

  int parse_small_index() {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected variable index");
    int k = text_[pos_++] - '0';
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("variable index out of range");
    if (k == 0) fail("variable index out of range");
    return k;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text) { return PolyParser(text).run(); }

}  // namespace charvar
