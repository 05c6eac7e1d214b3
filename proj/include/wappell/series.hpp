#pragma once

#include <stdexcept>
#include <vector>

#include "wappell/rational.hpp"

namespace wappell {

// Truncated formal power series in one variable t with coefficients in a
// Q-algebra T (Rat, Poly, PSym, ...). All operations truncate at the fixed
// order; nothing here is analytic. T needs: default construction = zero,
// construction from Rat for the unit, +=, * (ring product), * by Rat.
template <class T>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {
    if (order < 0) throw std::invalid_argument("series: negative order");
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const T& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  T& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

  TruncatedSeries operator*(const TruncatedSeries& o) const {
    if (order() != o.order()) {
      throw std::invalid_argument("series: mixed truncation orders");
    }
    TruncatedSeries r(order());
    for (int i = 0; i <= order(); ++i) {
      for (int j = 0; i + j <= order(); ++j) {
        r.coeffs_[static_cast<std::size_t>(i + j)] +=
            coeffs_[static_cast<std::size_t>(i)] * o.coeffs_[static_cast<std::size_t>(j)];
      }
    }
    return r;
  }

  // exp of a series with zero constant term, via the differential-equation
  // recurrence n*g_n = sum_{k=1..n} k f_k g_{n-k}.
  static TruncatedSeries exp_of(const TruncatedSeries& f) {
    TruncatedSeries g(f.order());
    g[0] = T(Rat(1));
    for (int n = 1; n <= f.order(); ++n) {
      T acc{};
      for (int k = 1; k <= n; ++k) {
        acc += (f[k] * Rat(k)) * g[n - k];
      }
      g[n] = acc * Rat(Rat(1) / Rat(n));
    }
    return g;
  }

 private:
  std::vector<T> coeffs_;
};

}  // namespace wappell
