#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace jacnewton {

// mpq_class keeps values canonical (reduced, positive denominator) as long as
// every construction from a raw numerator/denominator goes through make_rat.
using BigInt = mpz_class;
using BigRat = mpq_class;

BigRat make_rat(const BigInt& num, const BigInt& den);

// Accepts "p", "-p" and "p/q" with decimal digits only.
BigRat parse_rat(std::string_view text);
BigInt parse_int(std::string_view text);

std::string to_string(const BigRat& value);
std::string to_string(const BigInt& value);

bool is_integer(const BigRat& value);
BigInt to_integer(const BigRat& value);  // throws unless is_integer

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt gcd(const std::vector<BigInt>& values);
BigInt lcm(const BigInt& a, const BigInt& b);

BigRat pow(const BigRat& base, unsigned exponent);

}  // namespace jacnewton
