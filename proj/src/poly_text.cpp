// Polynomial text I/O.
//
//   expr    := ['-'] term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := primary ['^' exponent]
//   primary := '(' expr ')' | number [varpow+] | varpow+
//   varpow  := var ['^' exponent]
//   number  := digits ['/' digits]
//
// Whitespace is ignored between tokens. Variables are x,y or u,v (not mixed).

#include <algorithm>
#include <cctype>
#include <optional>

#include "jacnewton/error.hpp"
#include "jacnewton/polyalg.hpp"

namespace jacnewton {
namespace {

constexpr unsigned kMaxExponent = 4096;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  BiPoly parse() {
    BiPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail_unexpected();
    return p.with_vars(vars_.value_or(VarPair::xy));
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail_unexpected() const {
    if (at_end()) throw SyntaxError("unexpected end of input", pos_);
    throw SyntaxError(std::string("unexpected '") + text_[pos_] + "'", pos_);
  }

  BiPoly expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    BiPoly acc = term();
    if (negate) acc = -acc;
    while (true) {
      skip_ws();
      char op = peek();
      if (op != '+' && op != '-') break;
      ++pos_;
      skip_ws();
      if (peek() == '+' || peek() == '-') fail_unexpected();
      BiPoly t = term();
      if (op == '+')
        acc += t;
      else
        acc -= t;
    }
    return acc;
  }

  BiPoly term() {
    BiPoly acc = factor();
    while (true) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      acc *= factor();
    }
    return acc;
  }

  BiPoly factor() {
    BiPoly p = primary();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      p = pow(p, exponent());
    }
    return p;
  }

  BiPoly primary() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      BiPoly inner = expr();
      skip_ws();
      if (peek() != ')') {
        if (at_end()) throw SyntaxError("missing ')'", pos_);
        fail_unexpected();
      }
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigRat coef = number();
      return coef * monomial_tail(/*required=*/false);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return monomial_tail(/*required=*/true);
    fail_unexpected();
  }

  BigRat number() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    BigInt num(std::string(text_.substr(start, pos_ - start)), 10);
    if (peek() != '/') return BigRat(num);
    ++pos_;
    std::size_t den_start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (den_start == pos_) throw SyntaxError("expected denominator digits", pos_);
    BigInt den(std::string(text_.substr(den_start, pos_ - den_start)), 10);
    if (den == 0) throw SyntaxError("zero denominator", den_start);
    return make_rat(num, den);
  }

  unsigned exponent() {
    skip_ws();
    if (peek() == '-') throw SyntaxError("negative exponent", pos_);
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail_unexpected();
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 6 || std::stoul(digits) > kMaxExponent)
      throw SyntaxError("exponent too large", start);
    return static_cast<unsigned>(std::stoul(digits));
  }

  // Consumes var['^'exp] factors; with required=false zero factors is fine.
  BiPoly monomial_tail(bool required) {
    unsigned i = 0;
    unsigned j = 0;
    bool any = false;
    while (true) {
      std::size_t save = pos_;
      skip_ws();
      char c = peek();
      if (!std::isalpha(static_cast<unsigned char>(c))) {
        pos_ = save;
        break;
      }
      bool first = false;
      VarPair pair;
      if (c == 'x' || c == 'y') {
        pair = VarPair::xy;
        first = c == 'x';
      } else if (c == 'u' || c == 'v') {
        pair = VarPair::uv;
        first = c == 'u';
      } else {
        throw SyntaxError(std::string("unsupported variable name '") + c + "'", pos_);
      }
      if (vars_ && *vars_ != pair)
        throw SyntaxError("cannot mix (x,y) and (u,v) variables", pos_);
      vars_ = pair;
      ++pos_;
      unsigned e = 1;
      std::size_t before_caret = pos_;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        e = exponent();
      } else {
        pos_ = before_caret;
      }
      (first ? i : j) += e;
      any = true;
    }
    if (required && !any) fail_unexpected();
    return BiPoly::monomial(1, i, j);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::optional<VarPair> vars_;
};

std::string var_power(char name, unsigned e) {
  if (e == 0) return {};
  if (e == 1) return std::string(1, name);
  return std::string(1, name) + "^" + std::to_string(e);
}

}  // namespace

BiPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const BiPoly& f) {
  if (f.is_zero()) return "0";
  const char first = f.vars() == VarPair::xy ? 'x' : 'u';
  const char second = f.vars() == VarPair::xy ? 'y' : 'v';
  std::vector<std::pair<Monomial, BigRat>> terms(f.terms().begin(), f.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.j != b.first.j) return a.first.j > b.first.j;
    return a.first.i < b.first.i;
  });
  std::string out;
  bool leading = true;
  for (const auto& [m, c] : terms) {
    const bool negative = c < 0;
    if (leading)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    leading = false;
    BigRat mag = abs(c);
    std::string vars = var_power(first, m.i) + var_power(second, m.j);
    if (vars.empty() || mag != 1) out += to_string(mag);
    out += vars;
  }
  return out;
}

}  // namespace jacnewton
