#include "wappell/polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "wappell/detail/determinant.hpp"

namespace wappell {

Poly::Poly(const Rat& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(int degree, const Rat& coeff) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  Poly p;
  if (coeff != 0) {
    p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rat(0));
    p.coeffs_.back() = coeff;
  }
  return p;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<int> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

Rat Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rat Poly::leading_coeff() const {
  return coeffs_.empty() ? Rat(0) : coeffs_.back();
}

bool Poly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

Rat Poly::operator()(const Rat& point) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= point;
    acc += *it;
  }
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (Rat& a : coeffs_) a *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly p(*this);
  for (Rat& a : p.coeffs_) a = -a;
  return p;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  r.trim();
  return r;
}

Poly derivative(const Poly& p, int order) {
  if (order < 0) throw std::invalid_argument("derivative: negative order");
  Poly cur(p);
  for (int k = 0; k < order; ++k) {
    const auto& c = cur.coeffs();
    if (c.size() <= 1) return Poly();
    std::vector<Rat> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = Rat(static_cast<long>(i)) * c[i];
    cur = Poly(std::move(d));
  }
  return cur;
}

Poly wronskian(const std::vector<Poly>& ps) {
  if (ps.empty()) throw std::invalid_argument("wronskian: empty list");
  const std::size_t r = ps.size();
  std::vector<std::vector<Poly>> m(r, std::vector<Poly>(r));
  for (std::size_t j = 0; j < r; ++j) {
    m[0][j] = ps[j];
    for (std::size_t i = 1; i < r; ++i) m[i][j] = derivative(m[i - 1][j]);
  }
  return detail::determinant(m);
}

Poly exact_div_scalar(const Poly& p, const Rat& c) {
  if (c == 0) throw std::invalid_argument("exact_div_scalar: division by zero");
  Poly r(p);
  r *= Rat(Rat(1) / c);
  return r;
}

Poly compose(const Poly& p, const Poly& inner) {
  Poly acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * inner;
    acc += Poly(*it);
  }
  return acc;
}

Poly shift_argument(const Poly& p, const Rat& a) {
  return compose(p, Poly({a, Rat(1)}));
}

Poly square_shift_argument(const Poly& p, const Rat& a) {
  // (x + a)^2 = x^2 + 2a x + a^2
  return compose(p, Poly({a * a, Rat(2) * a, Rat(1)}));
}

bool is_integer_poly(const Poly& p) {
  for (const Rat& c : p.coeffs()) {
    if (!rat_is_integer(c)) return false;
  }
  return true;
}

Poly poly_pow(const Poly& p, int e) {
  if (e < 0) throw std::invalid_argument("poly_pow: negative exponent");
  Poly acc = Poly::one();
  Poly base(p);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

namespace {

// Shared term-by-term renderer; latex controls exponent braces and fractions.
std::string render(const Poly& p, bool latex) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  const auto& c = p.coeffs();
  bool first = true;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    const Rat& a = c[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    const bool negative = a < 0;
    Rat mag = negative ? Rat(-a) : a;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    std::string coeff_str;
    if (mag != 1 || i == 0) {
      if (latex && mag.get_den() != 1) {
        coeff_str = "\\frac{" + mag.get_num().get_str() + "}{" +
                    mag.get_den().get_str() + "}";
      } else {
        coeff_str = rat_to_string(mag);
      }
    }
    if (i == 0) {
      out << coeff_str;
    } else {
      if (!coeff_str.empty()) out << coeff_str << (latex ? "" : "*");
      out << "x";
      if (i > 1) {
        if (latex) {
          out << "^{" << i << "}";
        } else {
          out << "^" << i;
        }
      }
    }
  }
  return out.str();
}

}  // namespace

std::string poly_to_string(const Poly& p) { return render(p, false); }

std::string poly_to_latex(const Poly& p) { return render(p, true); }

}  // namespace wappell
