#include "wappell/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace wappell {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational: division by zero");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat parse_rat(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw std::invalid_argument("rational: empty string");
  Rat q;
  // mpq parsing accepts "p" and "p/q" but not decimals; it also accepts a
  // zero denominator, which we must reject before canonicalizing.
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) {
    throw std::invalid_argument("rational: cannot parse '" + text + "'");
  }
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) {
    throw std::invalid_argument("rational: division by zero in '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool rat_is_integer(const Rat& value) { return value.get_den() == 1; }

Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Rat rising_factorial(const Rat& a, int k) {
  if (k < 0) throw std::invalid_argument("rising_factorial: negative length");
  Rat prod(1);
  Rat term(a);
  for (int i = 0; i < k; ++i) {
    prod *= term;
    term += 1;
  }
  return prod;
}

Rat falling_factorial(const Rat& a, int k) {
  if (k < 0) throw std::invalid_argument("falling_factorial: negative length");
  Rat prod(1);
  Rat term(a);
  for (int i = 0; i < k; ++i) {
    prod *= term;
    term -= 1;
  }
  return prod;
}

Rat rat_pow(const Rat& base, int e) {
  if (e == 0) return Rat(1);
  if (base == 0 && e < 0) {
    throw std::invalid_argument("rat_pow: zero base with negative exponent");
  }
  Rat b = e < 0 ? Rat(Rat(1) / base) : base;
  unsigned long n = static_cast<unsigned long>(e < 0 ? -static_cast<long>(e) : e);
  Rat acc(1);
  while (n > 0) {
    if (n & 1UL) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

}  // namespace wappell
