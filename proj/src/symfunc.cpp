#include "wappell/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "wappell/detail/determinant.hpp"
#include "wappell/error.hpp"
#include "wappell/series.hpp"

namespace wappell {

PSym::PSym(const Rat& constant) {
  if (constant != 0) terms_.emplace(Partition(), constant);
}

PSym PSym::p_monomial(const Partition& mu, const Rat& coeff) {
  PSym f;
  if (coeff != 0) f.terms_.emplace(mu, coeff);
  return f;
}

Rat PSym::coeff(const Partition& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? Rat(0) : it->second;
}

std::optional<int> PSym::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int deg = terms_.begin()->first.size();
  for (const auto& [mu, coeff] : terms_) {
    if (mu.size() != deg) return std::nullopt;
  }
  return deg;
}

void PSym::add_term(const Partition& mu, const Rat& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(mu, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

PSym& PSym::operator+=(const PSym& o) {
  for (const auto& [mu, coeff] : o.terms_) add_term(mu, coeff);
  return *this;
}

PSym& PSym::operator-=(const PSym& o) {
  for (const auto& [mu, coeff] : o.terms_) add_term(mu, Rat(-coeff));
  return *this;
}

PSym PSym::operator-() const {
  PSym r;
  for (const auto& [mu, coeff] : terms_) r.terms_.emplace(mu, Rat(-coeff));
  return r;
}

namespace {

// Multiset union of two part lists (the product rule p_mu p_nu = p_{mu+nu}).
Partition merge_parts(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(a.length() + b.length()));
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(),
             b.parts().end(), std::back_inserter(parts), std::greater<int>());
  return Partition(std::move(parts));
}

}  // namespace

PSym operator*(const PSym& a, const PSym& b) {
  PSym r;
  for (const auto& [mu, ca] : a.terms_) {
    for (const auto& [nu, cb] : b.terms_) {
      r.add_term(merge_parts(mu, nu), ca * cb);
    }
  }
  return r;
}

PSym operator*(const PSym& a, const Rat& c) {
  PSym r;
  if (c == 0) return r;
  for (const auto& [mu, coeff] : a.terms_) r.terms_.emplace(mu, coeff * c);
  return r;
}

PSym p_gen(int m) {
  if (m == 0) throw std::invalid_argument("p_0 undefined");
  if (m < 0) throw std::invalid_argument("p_gen: negative index");
  return PSym::p_monomial(Partition({m}));
}

namespace {

std::mutex gen_cache_mu;
std::vector<PSym> h_cache;  // h_cache[m] = h_m
std::vector<PSym> e_cache;

// Extends a cache of generating-series coefficients exp(sum f_m t^m) where
// f_m = sign_m * p_m / m; sign is +1 for h and alternates for e.
void extend_gen_cache(std::vector<PSym>& cache, int m, bool alternating) {
  if (static_cast<int>(cache.size()) > m) return;
  TruncatedSeries<PSym> f(m);
  for (int k = 1; k <= m; ++k) {
    Rat coeff = Rat(1, k);
    if (alternating && k % 2 == 0) coeff = -coeff;
    f[k] = p_gen(k) * coeff;
  }
  auto g = TruncatedSeries<PSym>::exp_of(f);
  cache.clear();
  for (int k = 0; k <= m; ++k) cache.push_back(g[k]);
}

}  // namespace

PSym h_gen(int m) {
  if (m < 0) return PSym();
  if (m == 0) return PSym::one();
  std::lock_guard<std::mutex> lock(gen_cache_mu);
  extend_gen_cache(h_cache, m, /*alternating=*/false);
  return h_cache[static_cast<std::size_t>(m)];
}

PSym e_gen(int m) {
  if (m < 0) return PSym();
  if (m == 0) return PSym::one();
  std::lock_guard<std::mutex> lock(gen_cache_mu);
  extend_gen_cache(e_cache, m, /*alternating=*/true);
  return e_cache[static_cast<std::size_t>(m)];
}

namespace {

// Transient ring for expanding Jacobi-Trudi determinants before conversion to
// the p-basis: integer combinations of monomials in the generators, keyed by
// the multiset of generator indices. Coefficients stay integers because the
// determinant entries are single generators.
struct GenPoly {
  std::map<Partition, Int> terms;

  static GenPoly one() {
    GenPoly g;
    g.terms.emplace(Partition(), Int(1));
    return g;
  }
  static GenPoly gen(int m) {
    GenPoly g;
    g.terms.emplace(Partition({m}), Int(1));
    return g;
  }
  bool is_zero() const { return terms.empty(); }

  GenPoly& operator+=(const GenPoly& o) {
    for (const auto& [mu, coeff] : o.terms) {
      auto [it, inserted] = terms.try_emplace(mu, coeff);
      if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms.erase(it);
      }
    }
    return *this;
  }
  GenPoly operator-() const {
    GenPoly r;
    for (const auto& [mu, coeff] : terms) r.terms.emplace(mu, Int(-coeff));
    return r;
  }
  GenPoly operator*(const GenPoly& o) const {
    GenPoly r;
    for (const auto& [mu, ca] : terms) {
      for (const auto& [nu, cb] : o.terms) {
        Partition key = merge_parts(mu, nu);
        auto [it, inserted] = r.terms.try_emplace(key, ca * cb);
        if (!inserted) {
          it->second += ca * cb;
          if (it->second == 0) r.terms.erase(it);
        }
      }
    }
    return r;
  }
};

// Jacobi-Trudi determinant det[gen_{lambda_i - i + j}] in the transient ring.
GenPoly jacobi_trudi_det(const Partition& lambda) {
  const int r = lambda.length();
  std::vector<std::vector<GenPoly>> m(static_cast<std::size_t>(r),
                                      std::vector<GenPoly>(static_cast<std::size_t>(r)));
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j <= r; ++j) {
      const int idx = lambda.part(i) - i + j;
      if (idx < 0) continue;  // zero entry
      m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
          idx == 0 ? GenPoly::one() : GenPoly::gen(idx);
    }
  }
  return detail::determinant(m);
}

std::mutex expansion_cache_mu;
std::map<Partition, PSym> h_monomial_cache;  // h_mu -> p-basis
std::map<Partition, PSym> e_monomial_cache;

// p-basis expansion of a product of generators prod gen_{mu_i}, memoized by
// peeling the largest index: gen_mu = gen(mu_1) * gen_{rest}.
PSym expand_monomial(const Partition& mu, std::map<Partition, PSym>& cache,
                     PSym (*generator)(int)) {
  auto it = cache.find(mu);
  if (it != cache.end()) return it->second;
  PSym value;
  if (mu.empty()) {
    value = PSym::one();
  } else {
    std::vector<int> rest(mu.parts().begin() + 1, mu.parts().end());
    value = generator(mu.part(1)) * expand_monomial(Partition(rest), cache, generator);
  }
  cache.emplace(mu, value);
  return value;
}

PSym convert_genpoly(const GenPoly& g, std::map<Partition, PSym>& cache,
                     PSym (*generator)(int)) {
  PSym sum;
  for (const auto& [mu, coeff] : g.terms) {
    sum += expand_monomial(mu, cache, generator) * Rat(coeff);
  }
  return sum;
}

std::mutex schur_cache_mu;
std::map<Partition, PSym> schur_cache;

}  // namespace

PSym schur(const Partition& lambda) {
  {
    std::lock_guard<std::mutex> lock(schur_cache_mu);
    auto it = schur_cache.find(lambda);
    if (it != schur_cache.end()) return it->second;
  }
  GenPoly det = jacobi_trudi_det(lambda);
  PSym value;
  {
    std::lock_guard<std::mutex> lock(expansion_cache_mu);
    value = convert_genpoly(det, h_monomial_cache, &h_gen);
  }
  std::lock_guard<std::mutex> lock(schur_cache_mu);
  schur_cache.emplace(lambda, value);
  return value;
}

PSym schur_via_dual_jacobi_trudi(const Partition& lambda) {
  GenPoly det = jacobi_trudi_det(lambda);
  std::lock_guard<std::mutex> lock(expansion_cache_mu);
  return convert_genpoly(det, e_monomial_cache, &e_gen);
}

PSym omega(const PSym& f) {
  PSym r;
  for (const auto& [mu, coeff] : f.terms()) {
    // omega(p_mu) = (-1)^{|mu| - l(mu)} p_mu.
    const int sign = (mu.size() - mu.length()) % 2 == 0 ? 1 : -1;
    r += PSym::p_monomial(mu, sign == 1 ? coeff : Rat(-coeff));
  }
  return r;
}

PSym d_dp1(const PSym& f) {
  PSym r;
  for (const auto& [mu, coeff] : f.terms()) {
    // Multiplicity of part 1 (parts are sorted descending, so count from the
    // back).
    int ones = 0;
    for (auto it = mu.parts().rbegin(); it != mu.parts().rend() && *it == 1; ++it) {
      ++ones;
    }
    if (ones == 0) continue;
    std::vector<int> rest(mu.parts().begin(), mu.parts().end() - 1);
    r += PSym::p_monomial(Partition(rest), coeff * Rat(ones));
  }
  return r;
}

std::vector<std::pair<Partition, int>> mn_multiply_p(int k, const Partition& lambda) {
  std::vector<std::pair<Partition, int>> result;
  for (const RimHook& hook : rim_hooks_up(lambda, k)) {
    result.emplace_back(hook.outer, hook.height % 2 == 0 ? 1 : -1);
  }
  return result;
}

std::map<Partition, Int> augmented_schur_p_integral(const Partition& lambda) {
  const PSym augmented = schur(lambda) * Rat(hook_product(lambda));
  std::map<Partition, Int> result;
  for (const auto& [mu, coeff] : augmented.terms()) {
    if (!rat_is_integer(coeff)) {
      throw InternalError("augmented Schur coefficient for p_" + mu.to_string() +
                          " in " + lambda.to_string() + " is not an integer: " +
                          rat_to_string(coeff));
    }
    result.emplace(mu, coeff.get_num());
  }
  return result;
}

Poly phi_apply(const AppellSpec& spec, const PSym& f) {
  const Poly p1_image({spec.cumulant(1), Rat(1)});  // x + c_1
  // Powers of the p_1 image, filled on demand.
  std::vector<Poly> powers{Poly::one()};
  Poly result;
  for (const auto& [mu, coeff] : f.terms()) {
    int ones = 0;
    Rat scalar = coeff;
    for (int part : mu.parts()) {
      if (part == 1) {
        ++ones;
      } else {
        scalar *= spec.cumulant(part) / Rat(factorial(part - 1));
      }
    }
    if (scalar == 0) continue;
    while (static_cast<int>(powers.size()) <= ones) {
      powers.push_back(powers.back() * p1_image);
    }
    result += powers[static_cast<std::size_t>(ones)] * scalar;
  }
  return result;
}

std::pair<PSym, PSym> schur_newton_lhs_rhs(const Partition& lambda) {
  const int n = lambda.size();
  PSym lhs = schur(lambda) * Rat(n);
  PSym rhs;
  for (int k = 1; k <= n; ++k) {
    PSym inner;
    for (const RimHook& hook : rim_hooks_down(lambda, k)) {
      const Rat sign = hook.height % 2 == 0 ? Rat(1) : Rat(-1);
      inner += schur(hook.inner) * sign;
    }
    if (inner.is_zero()) continue;
    rhs += p_gen(k) * inner;
  }
  return {lhs, rhs};
}

PSym cauchy_diagonal(int n) {
  if (n < 0) throw std::invalid_argument("cauchy_diagonal: negative order");
  TruncatedSeries<PSym> f(n);
  for (int k = 1; k <= n; ++k) {
    f[k] = p_gen(k) * p_gen(k) * Rat(1, k);
  }
  return TruncatedSeries<PSym>::exp_of(f)[n];
}

}  // namespace wappell
