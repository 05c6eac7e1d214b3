#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wappell/rational.hpp"

namespace wappell {

// Dense univariate polynomial over Rat. Coefficients are stored lowest degree
// first with no trailing zeros; the zero polynomial has an empty coefficient
// vector and degree() == nullopt (there is deliberately no -1 sentinel).
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rat& constant);
  explicit Poly(std::vector<Rat> coeffs);  // trims trailing zeros

  static Poly one() { return Poly(Rat(1)); }
  static Poly x() { return monomial(1); }
  static Poly monomial(int degree, const Rat& coeff = Rat(1));

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::optional<int> degree() const;
  Rat coeff(int i) const;  // zero outside the stored range
  Rat leading_coeff() const;
  bool is_monic() const;

  Rat operator()(const Rat& point) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rat& c);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

// order-th derivative (order >= 0).
Poly derivative(const Poly& p, int order = 1);

// Wronskian determinant det[ p_j^(i-1) ] of a nonempty list.
Poly wronskian(const std::vector<Poly>& ps);

// p / c. Throws std::invalid_argument when c == 0.
Poly exact_div_scalar(const Poly& p, const Rat& c);

// p(inner(x)).
Poly compose(const Poly& p, const Poly& inner);

// p(x + a).
Poly shift_argument(const Poly& p, const Rat& a);

// p((x + a)^2).
Poly square_shift_argument(const Poly& p, const Rat& a);

// True when every coefficient is an integer.
bool is_integer_poly(const Poly& p);

Poly poly_pow(const Poly& p, int e);  // e >= 0

// Human-readable form, highest degree first, e.g. "x^3 - 1/2*x + 1".
std::string poly_to_string(const Poly& p);

// LaTeX form, e.g. "x^{3} - \frac{1}{2}x + 1".
std::string poly_to_latex(const Poly& p);

}  // namespace wappell
