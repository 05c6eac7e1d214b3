#include "wappell/wapoly.hpp"

#include <sstream>
#include <stdexcept>

#include "wappell/cyclotomic.hpp"
#include "wappell/error.hpp"
#include "wappell/symfunc.hpp"

namespace wappell {

Route parse_route(const std::string& text) {
  if (text == "direct") return Route::direct;
  if (text == "phi") return Route::via_phi;
  if (text == "recurrence") return Route::recurrence;
  if (text == "cross") return Route::cross_checked;
  throw std::invalid_argument("unknown route '" + text +
                              "' (expected direct|phi|recurrence|cross)");
}

std::string route_name(Route route) {
  switch (route) {
    case Route::direct: return "direct";
    case Route::via_phi: return "phi";
    case Route::recurrence: return "recurrence";
    case Route::cross_checked: return "cross";
  }
  throw std::invalid_argument("unknown route value");
}

WapEvaluator::WapEvaluator(AppellSpec spec) : spec_(std::move(spec)) {}

const Poly& WapEvaluator::direct(const Partition& lambda) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = direct_cache_.find(lambda);
  if (it != direct_cache_.end()) return it->second;

  const std::vector<int> degrees = degree_vector(lambda);
  std::vector<Poly> ps;
  ps.reserve(degrees.size());
  for (int n : degrees) ps.push_back(appell_poly(spec_, n));
  Poly value;
  if (ps.empty()) {
    value = Poly::one();
  } else {
    const Int delta = vandermonde(degrees);
    if (delta == 0) {
      throw InternalError("wap_direct: vanishing Vandermonde factor for " +
                          lambda.to_string());
    }
    value = exact_div_scalar(wronskian(ps), Rat(delta));
  }
  return direct_cache_.emplace(lambda, std::move(value)).first->second;
}

const Poly& WapEvaluator::via_phi(const Partition& lambda) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = phi_cache_.find(lambda);
  if (it != phi_cache_.end()) return it->second;
  Poly value = phi_apply(spec_, schur(lambda)) * Rat(hook_product(lambda));
  return phi_cache_.emplace(lambda, std::move(value)).first->second;
}

const Poly& WapEvaluator::rec_impl(const Partition& lambda) {
  auto it = rec_cache_.find(lambda);
  if (it != rec_cache_.end()) return it->second;
  Poly acc;
  if (lambda.empty()) {
    acc = Poly::one();
  } else {
    const int n = lambda.size();
    // x * sum of F_mu A_mu over the lower covers.
    Poly down;
    for (const Partition& mu : covers_down(lambda)) {
      down += rec_impl(mu) * Rat(syt_count(mu));
    }
    acc = Poly::x() * down;
    // Cumulant terms: c_k C(n-1, k-1) * height-signed rim-hook sums.
    for (int k = 1; k <= n; ++k) {
      const Rat ck = spec_.cumulant(k);
      if (ck == 0) continue;
      Poly inner;
      for (const RimHook& hook : rim_hooks_down(lambda, k)) {
        Poly term = rec_impl(hook.inner) * Rat(syt_count(hook.inner));
        if (hook.height % 2 != 0) term = -term;
        inner += term;
      }
      if (inner.is_zero()) continue;
      acc += inner * Rat(ck * Rat(binomial(n - 1, k - 1)));
    }
    acc = exact_div_scalar(acc, Rat(syt_count(lambda)));
  }
  return rec_cache_.emplace(lambda, std::move(acc)).first->second;
}

const Poly& WapEvaluator::recurrence(const Partition& lambda) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return rec_impl(lambda);
}

const Poly& WapEvaluator::wap(const Partition& lambda, Route route) {
  switch (route) {
    case Route::direct: return direct(lambda);
    case Route::via_phi: return via_phi(lambda);
    case Route::recurrence: return recurrence(lambda);
    case Route::cross_checked: break;
  }
  std::lock_guard<std::recursive_mutex> lock(mu_);
  const Poly& a = direct(lambda);
  if (cross_checked_ok_.contains(lambda)) return a;
  const Poly& b = via_phi(lambda);
  const Poly& c = recurrence(lambda);
  if (a != b || a != c) {
    std::ostringstream msg;
    msg << "route disagreement for " << spec_.name() << ", partition "
        << lambda.to_string() << ": direct=" << poly_to_string(a)
        << " phi=" << poly_to_string(b) << " recurrence=" << poly_to_string(c);
    throw RouteMismatch(msg.str());
  }
  cross_checked_ok_.insert(lambda);
  return a;
}

Poly wap_direct(const AppellSpec& spec, const Partition& lambda) {
  WapEvaluator eval(spec);
  return eval.direct(lambda);
}

Poly wap_via_phi(const AppellSpec& spec, const Partition& lambda) {
  WapEvaluator eval(spec);
  return eval.via_phi(lambda);
}

Poly wap_recurrence(const AppellSpec& spec, const Partition& lambda) {
  WapEvaluator eval(spec);
  return eval.recurrence(lambda);
}

Poly wap(const AppellSpec& spec, const Partition& lambda, Route route) {
  WapEvaluator eval(spec);
  return eval.wap(lambda, route);
}

bool derivative_identity_check(WapEvaluator& eval, const Partition& lambda) {
  const Poly lhs = derivative(eval.wap(lambda)) * Rat(syt_count(lambda));
  Poly rhs;
  for (const Partition& mu : covers_down(lambda)) {
    rhs += eval.wap(mu) * Rat(syt_count(mu));
  }
  rhs *= Rat(lambda.size());
  return lhs == rhs;
}

bool derivative_identity_check(const AppellSpec& spec, const Partition& lambda) {
  WapEvaluator eval(spec);
  return derivative_identity_check(eval, lambda);
}

bool topdown_check(WapEvaluator& eval, const Partition& lambda, int k) {
  if (k < 1) throw std::invalid_argument("topdown_check: k must be positive");
  const int n = lambda.size();
  if (k == 1) {
    // (n+1)(x + c_1) F_lambda A_lambda = sum over covers.
    const Poly shift({eval.spec().cumulant(1), Rat(1)});
    const Poly lhs =
        shift * eval.wap(lambda) * Rat(Rat(n + 1) * Rat(syt_count(lambda)));
    Poly rhs;
    for (const Partition& gamma : covers_up(lambda)) {
      rhs += eval.wap(gamma) * Rat(syt_count(gamma));
    }
    return lhs == rhs;
  }
  const Rat weight = Rat(k) * eval.spec().cumulant(k) * Rat(binomial(n + k, k)) *
                     Rat(syt_count(lambda));
  const Poly lhs = eval.wap(lambda) * weight;
  Poly rhs;
  for (const RimHook& hook : rim_hooks_up(lambda, k)) {
    Poly term = eval.wap(hook.outer) * Rat(syt_count(hook.outer));
    if (hook.height % 2 != 0) term = -term;
    rhs += term;
  }
  return lhs == rhs;
}

bool topdown_check(const AppellSpec& spec, const Partition& lambda, int k) {
  WapEvaluator eval(spec);
  return topdown_check(eval, lambda, k);
}

bool generating_recurrence_check(WapEvaluator& eval, const Partition& lambda) {
  if (lambda.empty()) return true;
  const int n = lambda.size();
  const Poly lhs = eval.direct(lambda) * Rat(syt_count(lambda));
  Poly down;
  for (const Partition& mu : covers_down(lambda)) {
    down += eval.direct(mu) * Rat(syt_count(mu));
  }
  Poly rhs = Poly::x() * down;
  for (int k = 1; k <= n; ++k) {
    const Rat ck = eval.spec().cumulant(k);
    if (ck == 0) continue;
    Poly inner;
    for (const RimHook& hook : rim_hooks_down(lambda, k)) {
      Poly term = eval.direct(hook.inner) * Rat(syt_count(hook.inner));
      if (hook.height % 2 != 0) term = -term;
      inner += term;
    }
    rhs += inner * Rat(ck * Rat(binomial(n - 1, k - 1)));
  }
  return lhs == rhs;
}

bool dual_check(WapEvaluator& eval, WapEvaluator& dual_eval, const Partition& lambda) {
  if (!(dual_eval.wap(lambda) == eval.wap(conjugate(lambda)))) return false;
  // The dual sequence must itself satisfy the Appell derivative property.
  const int n = lambda.size();
  if (n >= 1) {
    const Partition col(std::vector<int>(static_cast<std::size_t>(n), 1));
    const Partition col_prev(std::vector<int>(static_cast<std::size_t>(n - 1), 1));
    if (!(derivative(eval.wap(col)) == eval.wap(col_prev) * Rat(n))) return false;
  }
  return true;
}

bool dual_check(const AppellSpec& spec, const Partition& lambda) {
  WapEvaluator eval(spec);
  WapEvaluator dual_eval(dual(spec));
  return dual_check(eval, dual_eval, lambda);
}

bool exp_rt_dual_transform_check(const Rat& alpha, int r, const Partition& lambda) {
  if (r < 1) throw std::invalid_argument("exp_rt_dual_transform_check: r must be >= 1");
  WapEvaluator eval(preset_exp_rt(alpha, r));
  const Poly& a = eval.wap(lambda);
  const Poly& a_conj = eval.wap(conjugate(lambda));
  const int n = lambda.size();

  const CyclotomicField field(2 * r);
  // rho = -zeta_{2r}; rho^e = (-1)^e zeta^e.
  auto rho_power = [&](int e) {
    Cyclo z = field.zeta(e);
    return (e % 2 != 0) ? -z : z;
  };
  // Coefficientwise: [x^j] A_{lambda'} = rho^{n-j} [x^j] A_lambda.
  for (int j = 0; j <= n; ++j) {
    const Cyclo lhs = field.from_rat(a_conj.coeff(j));
    const Cyclo rhs = rho_power(n - j) * a.coeff(j);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

bool integrality_check(const AppellSpec& spec, const Partition& lambda, Route route) {
  if (!integrality_hypothesis(spec, lambda.size())) return true;  // vacuous
  return is_integer_poly(wap(spec, lambda, route));
}

AppellNet::AppellNet() { constants.emplace(Partition(), Rat(1)); }

AppellNet::AppellNet(std::map<Partition, Rat> constants_in)
    : constants(std::move(constants_in)) {
  auto it = constants.find(Partition());
  if (it == constants.end()) {
    constants.emplace(Partition(), Rat(1));
  } else if (it->second != 1) {
    throw std::invalid_argument("appell net: constant at the empty partition must be 1");
  }
}

Poly appell_net_poly(const AppellNet& net, const Partition& lambda) {
  const int n = lambda.size();
  Poly sum;
  for (const auto& [mu, z] : net.constants) {
    if (z == 0 || !lambda.contains(mu)) continue;
    const Int chains = skew_syt_count(lambda, mu);
    if (chains == 0 && !(mu == lambda)) continue;
    const Rat weight =
        Rat(binomial(n, mu.size())) * Rat(chains) * Rat(syt_count(mu)) * z;
    sum += Poly::monomial(n - mu.size(), weight);
  }
  return exact_div_scalar(sum, Rat(syt_count(lambda)));
}

AppellNet net_from_spec(const AppellSpec& spec, int max_size) {
  WapEvaluator eval(spec);
  std::map<Partition, Rat> constants;
  for (const Partition& mu : partitions_up_to(max_size)) {
    Rat z = eval.wap(mu)(Rat(0));
    if (z != 0) constants.emplace(mu, z);
  }
  return AppellNet(std::move(constants));
}

}  // namespace wappell
