#pragma once

#include <memory>
#include <vector>

#include "wappell/rational.hpp"

namespace wappell {

// m-th cyclotomic polynomial, integer coefficients lowest degree first,
// computed exactly by dividing x^m - 1 by the cyclotomic polynomials of the
// proper divisors of m.
std::vector<Int> cyclotomic_polynomial(int m);

namespace detail {
struct CycloFieldData {
  int order;                // m in Q(zeta_m)
  std::vector<Int> minpoly; // Phi_m, monic
  int degree;               // phi(m) = deg Phi_m
};
}  // namespace detail

class Cyclo;

// The field Q(zeta_m) for a primitive m-th root of unity zeta, represented
// exactly as Q[x]/(Phi_m). Elements are coordinate vectors in the power basis
// 1, zeta, ..., zeta^{phi(m)-1}.
class CyclotomicField {
 public:
  explicit CyclotomicField(int order);

  int order() const;
  int degree() const;
  const std::vector<Int>& minimal_polynomial() const;

  Cyclo zero() const;
  Cyclo one() const;
  Cyclo from_rat(const Rat& value) const;
  // zeta^power for any integer power (reduced mod the order).
  Cyclo zeta(long power = 1) const;

 private:
  std::shared_ptr<const detail::CycloFieldData> data_;
  friend class Cyclo;
};

// Element of a CyclotomicField. Mixing elements of different field instances
// with different orders throws std::invalid_argument.
class Cyclo {
 public:
  Cyclo() = default;  // rational zero of no particular field; absorbs into any

  const std::vector<Rat>& coords() const { return coords_; }
  bool is_zero() const;
  bool is_rational() const;
  // Throws std::invalid_argument when the element is not rational.
  Rat as_rational() const;

  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo operator-() const;
  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator*(const Cyclo& a, const Rat& c);
  friend bool operator==(const Cyclo& a, const Cyclo& b);

  Cyclo pow(long e) const;  // e >= 0

 private:
  Cyclo(std::shared_ptr<const detail::CycloFieldData> data, std::vector<Rat> coords);
  std::shared_ptr<const detail::CycloFieldData> data_;  // null for bare zero
  std::vector<Rat> coords_;
  friend class CyclotomicField;
};

}  // namespace wappell
