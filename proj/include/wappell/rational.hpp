#pragma once

#include <gmpxx.h>

#include <string>

namespace wappell {

// Arbitrary-precision integers and rationals. GMP keeps mpq_class values
// canonical (lowest terms, positive denominator) through arithmetic; the
// helpers below guarantee the same for construction and parsing.
using Int = mpz_class;
using Rat = mpq_class;

// num/den in canonical form. Throws std::invalid_argument when den == 0.
Rat make_rat(const Int& num, const Int& den);

// Accepts an optionally signed integer "p" or fraction "p/q" (no decimals).
Rat parse_rat(const std::string& text);

// "p/q", or plain "p" when the denominator is 1.
std::string rat_to_string(const Rat& value);

bool rat_is_integer(const Rat& value);

Int factorial(int n);

// Zero outside 0 <= k <= n.
Int binomial(int n, int k);

// a(a+1)...(a+k-1); empty product (=1) for k == 0.
Rat rising_factorial(const Rat& a, int k);

// a(a-1)...(a-k+1); empty product (=1) for k == 0.
Rat falling_factorial(const Rat& a, int k);

// base^e; e may be negative when base is nonzero.
Rat rat_pow(const Rat& base, int e);

}  // namespace wappell
