#include "wappell/cyclotomic.hpp"

#include <map>
#include <stdexcept>

#include "wappell/error.hpp"

namespace wappell {

namespace {

// Exact quotient of integer polynomials with monic divisor (remainder must be
// zero). Coefficients lowest degree first.
std::vector<Int> exact_monic_div(std::vector<Int> num, const std::vector<Int>& den) {
  if (den.empty() || den.back() != 1) {
    throw InternalError("cyclotomic: divisor not monic");
  }
  if (num.size() < den.size()) {
    throw InternalError("cyclotomic: degree underflow in division");
  }
  std::vector<Int> quot(num.size() - den.size() + 1, Int(0));
  for (std::size_t qi = quot.size(); qi-- > 0;) {
    Int lead = num[qi + den.size() - 1];
    quot[qi] = lead;
    if (lead == 0) continue;
    for (std::size_t k = 0; k < den.size(); ++k) {
      num[qi + k] -= lead * den[k];
    }
  }
  for (const Int& c : num) {
    if (c != 0) throw InternalError("cyclotomic: inexact division");
  }
  return quot;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
  // Phi_d for all divisors d of m, built in increasing order.
  std::map<int, std::vector<Int>> phi;
  for (int d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    // x^d - 1
    std::vector<Int> num(static_cast<std::size_t>(d) + 1, Int(0));
    num.front() = -1;
    num.back() = 1;
    std::vector<Int> quot = std::move(num);
    for (const auto& [e, phi_e] : phi) {
      if (d % e == 0) quot = exact_monic_div(std::move(quot), phi_e);
    }
    phi.emplace(d, std::move(quot));
  }
  return phi.at(m);
}

CyclotomicField::CyclotomicField(int order) {
  auto data = std::make_shared<detail::CycloFieldData>();
  data->order = order;
  data->minpoly = cyclotomic_polynomial(order);
  data->degree = static_cast<int>(data->minpoly.size()) - 1;
  data_ = std::move(data);
}

int CyclotomicField::order() const { return data_->order; }
int CyclotomicField::degree() const { return data_->degree; }
const std::vector<Int>& CyclotomicField::minimal_polynomial() const {
  return data_->minpoly;
}

Cyclo CyclotomicField::zero() const {
  return Cyclo(data_, std::vector<Rat>(static_cast<std::size_t>(data_->degree), Rat(0)));
}

Cyclo CyclotomicField::one() const { return from_rat(Rat(1)); }

Cyclo CyclotomicField::from_rat(const Rat& value) const {
  std::vector<Rat> coords(static_cast<std::size_t>(data_->degree), Rat(0));
  coords[0] = value;
  return Cyclo(data_, std::move(coords));
}

Cyclo CyclotomicField::zeta(long power) const {
  const int m = data_->order;
  long p = power % m;
  if (p < 0) p += m;
  // zeta^p as x^p reduced mod Phi_m.
  std::vector<Rat> raw(static_cast<std::size_t>(p) + 1, Rat(0));
  raw.back() = Rat(1);
  // Reduce: subtract leading * x^(k-deg) * Phi while degree >= deg.
  const auto& mp = data_->minpoly;
  const int deg = data_->degree;
  for (int k = static_cast<int>(raw.size()) - 1; k >= deg; --k) {
    Rat lead = raw[static_cast<std::size_t>(k)];
    if (lead == 0) continue;
    for (int t = 0; t <= deg; ++t) {
      raw[static_cast<std::size_t>(k - deg + t)] -= lead * Rat(mp[static_cast<std::size_t>(t)]);
    }
  }
  raw.resize(static_cast<std::size_t>(deg), Rat(0));
  return Cyclo(data_, std::move(raw));
}

Cyclo::Cyclo(std::shared_ptr<const detail::CycloFieldData> data, std::vector<Rat> coords)
    : data_(std::move(data)), coords_(std::move(coords)) {}

bool Cyclo::is_zero() const {
  for (const Rat& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

bool Cyclo::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (coords_[i] != 0) return false;
  }
  return true;
}

Rat Cyclo::as_rational() const {
  if (!is_rational()) {
    throw std::invalid_argument("cyclo: element is not rational");
  }
  return coords_.empty() ? Rat(0) : coords_[0];
}

namespace {

void check_same_field(const std::shared_ptr<const detail::CycloFieldData>& a,
                      const std::shared_ptr<const detail::CycloFieldData>& b) {
  if (a && b && a->order != b->order) {
    throw std::invalid_argument("cyclo: mixed field orders");
  }
}

}  // namespace

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  check_same_field(data_, o.data_);
  if (!data_) return *this = o;
  if (!o.data_) return *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
  check_same_field(data_, o.data_);
  if (!o.data_) return *this;
  if (!data_) return *this = -o;
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Cyclo Cyclo::operator-() const {
  Cyclo r(*this);
  for (Rat& c : r.coords_) c = -c;
  return r;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  check_same_field(a.data_, b.data_);
  if (!a.data_ || !b.data_) return Cyclo();  // bare zero
  const auto& data = a.data_;
  const int deg = data->degree;
  std::vector<Rat> raw(static_cast<std::size_t>(2 * deg), Rat(0));
  for (int i = 0; i < deg; ++i) {
    if (a.coords_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < deg; ++j) {
      raw[static_cast<std::size_t>(i + j)] +=
          a.coords_[static_cast<std::size_t>(i)] * b.coords_[static_cast<std::size_t>(j)];
    }
  }
  const auto& mp = data->minpoly;
  for (int k = static_cast<int>(raw.size()) - 1; k >= deg; --k) {
    Rat lead = raw[static_cast<std::size_t>(k)];
    if (lead == 0) continue;
    for (int t = 0; t <= deg; ++t) {
      raw[static_cast<std::size_t>(k - deg + t)] -= lead * Rat(mp[static_cast<std::size_t>(t)]);
    }
  }
  raw.resize(static_cast<std::size_t>(deg), Rat(0));
  return Cyclo(data, std::move(raw));
}

Cyclo operator*(const Cyclo& a, const Rat& c) {
  Cyclo r(a);
  for (Rat& x : r.coords_) x *= c;
  return r;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  check_same_field(a.data_, b.data_);
  if (!a.data_ || !b.data_) {
    return (!a.data_ ? true : a.is_zero()) && (!b.data_ ? true : b.is_zero());
  }
  return a.coords_ == b.coords_;
}

Cyclo Cyclo::pow(long e) const {
  if (e < 0) throw std::invalid_argument("cyclo: negative exponent in pow");
  if (!data_) {
    if (e == 0) throw std::invalid_argument("cyclo: 0^0 of bare zero");
    return Cyclo();
  }
  // Build acc = 1 in this field without re-deriving the minimal polynomial.
  std::vector<Rat> one_coords(coords_.size(), Rat(0));
  one_coords[0] = Rat(1);
  Cyclo acc(data_, std::move(one_coords));
  Cyclo base(*this);
  while (e > 0) {
    if (e & 1L) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

}  // namespace wappell
