#include "jacnewton/bigrat.hpp"

#include <cctype>

#include "jacnewton/error.hpp"

namespace jacnewton {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::syntax: return "syntax";
    case Errc::invalid_input: return "invalid_input";
    case Errc::zero_polynomial: return "zero_polynomial";
    case Errc::not_squarefree: return "not_squarefree";
    case Errc::not_transverse: return "not_transverse";
    case Errc::normalization_failed: return "normalization_failed";
    case Errc::not_convenient: return "not_convenient";
    case Errc::too_few_terms: return "too_few_terms";
    case Errc::not_plane_branch: return "not_plane_branch";
    case Errc::criterion_failed: return "criterion_failed";
    case Errc::duplicate_roots: return "duplicate_roots";
    case Errc::truncation_limited: return "truncation_limited";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(Errc::invalid_input, "zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

BigInt parse_int(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw SyntaxError("expected digits", pos);
  for (std::size_t k = pos; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw SyntaxError("unexpected character '" + std::string(1, text[k]) + "'", k);
  }
  BigInt value(std::string(text.substr(pos)), 10);
  return negative ? BigInt(-value) : value;
}

BigRat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRat(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw SyntaxError("signed denominator", slash + 1);
  BigInt den = parse_int(den_text);
  if (den == 0) throw SyntaxError("zero denominator", slash + 1);
  return make_rat(num, den);
}

std::string to_string(const BigRat& value) { return value.get_str(10); }
std::string to_string(const BigInt& value) { return value.get_str(10); }

bool is_integer(const BigRat& value) { return value.get_den() == 1; }

BigInt to_integer(const BigRat& value) {
  if (!is_integer(value))
    throw Error(Errc::invalid_input, "expected an integer, got " + to_string(value));
  return value.get_num();
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt gcd(const std::vector<BigInt>& values) {
  BigInt r = 0;
  for (const auto& v : values) r = gcd(r, v);
  return r;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigRat pow(const BigRat& base, unsigned exponent) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  return make_rat(num, den);
}

}  // namespace jacnewton
