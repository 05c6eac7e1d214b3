#include "wappell/verify.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "wappell/cyclotomic.hpp"
#include "wappell/error.hpp"
#include "wappell/partition.hpp"
#include "wappell/plancherel.hpp"
#include "wappell/symfunc.hpp"
#include "wappell/wapoly.hpp"

namespace wappell {

namespace {

// Runs one predicate, folding thrown math errors into failure witnesses so a
// corrupted spec produces reportable failures instead of aborting the sweep.
void check(SuiteResult& result, const std::string& what,
           const std::function<bool()>& predicate) {
  ++result.checked;
  try {
    if (!predicate()) result.failures.push_back(what);
  } catch (const RouteMismatch& e) {
    result.failures.push_back(what + ": " + e.what());
  } catch (const TheoremViolation& e) {
    result.failures.push_back(what + ": " + e.what());
  } catch (const InternalError& e) {
    result.failures.push_back(what + ": " + e.what());
  }
}

std::string tag(const Partition& lambda) { return "lambda=" + lambda.to_string(); }

SuiteResult suite_appell(const AppellSpec& spec, const VerifyOptions& opt) {
  SuiteResult result{"appell"};
  check(result, "A_0 = 1", [&] { return appell_poly(spec, 0) == Poly::one(); });
  for (int n = 1; n <= opt.max_size; ++n) {
    check(result, "A_" + std::to_string(n) + " monic of degree n", [&] {
      const Poly a = appell_poly(spec, n);
      return a.is_monic() && a.degree() == n;
    });
    check(result, "A_" + std::to_string(n) + "' = n A_{n-1}", [&] {
      return derivative(appell_poly(spec, n)) ==
             appell_poly(spec, n - 1) * Rat(n);
    });
  }
  return result;
}

SuiteResult suite_routes(const AppellSpec& spec, const VerifyOptions& opt) {
  SuiteResult result{"routes"};
  WapEvaluator eval(spec);
  for (const Partition& lambda : partitions_up_to(opt.max_size)) {
    check(result, tag(lambda) + " three routes agree, monic", [&] {
      const Poly& a = eval.wap(lambda);  // throws RouteMismatch on drift
      return a.is_monic() && a.degree() == lambda.size();
    });
  }
  check(result, "empty partition gives 1", [&] {
    return eval.wap(Partition()) == Poly::one();
  });
  for (int n = 1; n <= opt.max_size; ++n) {
    check(result, "single row (" + std::to_string(n) + ") matches A_n", [&] {
      return eval.wap(Partition({n})) == appell_poly(spec, n);
    });
  }
  return result;
}

SuiteResult suite_derivative(const AppellSpec& spec, const VerifyOptions& opt) {
  SuiteResult result{"derivative"};
  WapEvaluator eval(spec);
  for (int n = 1; n <= opt.max_size; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      check(result, tag(lambda) + " hook-weighted derivative identity",
            [&] { return derivative_identity_check(eval, lambda); });
    }
  }
  // Same mechanism one level up: d/dp_1 s_lambda = sum of covered Schur terms.
  for (int n = 1; n <= opt.max_size; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      check(result, tag(lambda) + " p_1-derivative of the Schur expansion", [&] {
        PSym rhs;
        for (const Partition& mu : covers_down(lambda)) rhs += schur(mu);
        return d_dp1(schur(lambda)) == rhs;
      });
    }
  }
  return result;
}

SuiteResult suite_topdown(const AppellSpec& spec, const VerifyOptions& opt) {
  SuiteResult result{"topdown"};
  WapEvaluator eval(spec);
  for (int k = 1; k <= opt.k_max; ++k) {
    for (const Partition& lambda : partitions_up_to(opt.max_size)) {
      check(result, tag(lambda) + " k=" + std::to_string(k),
            [&] { return topdown_check(eval, lambda, k); });
    }
  }
  return result;
}

SuiteResult suite_genrec(const AppellSpec& spec, const VerifyOptions& opt) {
  SuiteResult result{"genrec"};
  WapEvaluator eval(spec);
  for (int n = 1; n <= opt.max_size; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      check(result, tag(lambda) + " generating recurrence",
            [&] { return generating_recurrence_check(eval, lambda); });
    }
  }
  return result;
}

SuiteResult suite_dual(const AppellSpec& spec, const VerifyOptions& opt) {
  SuiteResult result{"dual"};
  WapEvaluator eval(spec);
  WapEvaluator dual_eval(dual(spec));
  for (const Partition& lambda : partitions_up_to(opt.max_size)) {
    check(result, tag(lambda) + " dual vs conjugate",
          [&] { return dual_check(eval, dual_eval, lambda); });
  }
  return result;
}

SuiteResult suite_double_dual(const AppellSpec& spec, const VerifyOptions& opt) {
  SuiteResult result{"double-dual"};
  const AppellSpec dd = dual(dual(spec));
  const int order = std::max(20, opt.max_size);
  for (int k = 1; k <= order; ++k) {
    check(result, "cumulant order " + std::to_string(k) + " restored", [&] {
      return dd.cumulant(k) == spec.cumulant(k);
    });
  }
  WapEvaluator eval(spec);
  WapEvaluator dd_eval(dd);
  for (const Partition& lambda : partitions_up_to(opt.max_size)) {
    check(result, tag(lambda) + " double dual restores the polynomial",
          [&] { return dd_eval.wap(lambda) == eval.wap(lambda); });
  }
  return result;
}

SuiteResult suite_self_dual(const AppellSpec& spec, const VerifyOptions& opt) {
  SuiteResult result{"self-dual"};
  WapEvaluator eval(spec);
  WapEvaluator dual_eval(dual(spec));
  check(result, "three self-duality criteria agree at this scale", [&] {
    bool columns_match = true;  // A_n = A of the one-column partition of n
    for (int n = 0; n <= opt.max_size && columns_match; ++n) {
      const Partition col(std::vector<int>(static_cast<std::size_t>(n), 1));
      columns_match = dual_eval.wap(Partition({n == 0 ? 0 : n})) ==
                      eval.wap(Partition({n == 0 ? 0 : n}));
      columns_match = columns_match &&
                      dual_eval.wap(col) == eval.wap(col);
    }
    bool conjugates_match = true;
    for (const Partition& lambda : partitions_up_to(opt.max_size)) {
      if (!(eval.wap(lambda) == eval.wap(conjugate(lambda)))) {
        conjugates_match = false;
        break;
      }
    }
    bool even_cumulants_vanish = true;
    for (int k = 2; k <= opt.max_size; k += 2) {
      if (spec.cumulant(k) != 0) {
        even_cumulants_vanish = false;
        break;
      }
    }
    return columns_match == conjugates_match &&
           conjugates_match == even_cumulants_vanish;
  });
  return result;
}

SuiteResult suite_integrality(const AppellSpec& spec, const VerifyOptions& opt) {
  SuiteResult result{"integrality"};
  // Mechanism: the hook-scaled Schur expansion has integer coefficients.
  for (const Partition& lambda : partitions_up_to(opt.max_size)) {
    check(result, tag(lambda) + " integral hook-scaled Schur expansion", [&] {
      augmented_schur_p_integral(lambda);  // throws InternalError on failure
      return true;
    });
  }
  if (!integrality_hypothesis(spec, opt.max_size)) {
    result.skipped += static_cast<long>(partitions_up_to(opt.max_size).size());
    return result;
  }
  WapEvaluator eval(spec);
  for (const Partition& lambda : partitions_up_to(opt.max_size)) {
    check(result, tag(lambda) + " integer coefficients",
          [&] { return is_integer_poly(eval.wap(lambda)); });
  }
  return result;
}

SuiteResult suite_mean(const AppellSpec& spec, const VerifyOptions& opt) {
  SuiteResult result{"mean"};
  WapEvaluator eval(spec);
  for (int n = 0; n <= opt.max_size; ++n) {
    check(result, "n=" + std::to_string(n) + " mean equals A_1^n", [&] {
      return plancherel_mean_bruteforce(eval, n) ==
             plancherel_mean_closed(spec, n);
    });
  }
  // Symmetric-function counterpart: hook-weighted Schur sum is a power of h_1.
  for (int n = 0; n <= opt.max_size; ++n) {
    check(result, "n=" + std::to_string(n) + " F-weighted Schur sum is h_1^n", [&] {
      PSym sum;
      for (const Partition& lambda : partitions_of(n)) {
        sum += schur(lambda) * Rat(syt_count(lambda));
      }
      const Partition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
      return sum == PSym::p_monomial(ones);
    });
  }
  return result;
}

SuiteResult suite_second_moment(const AppellSpec& spec, const VerifyOptions& opt) {
  SuiteResult result{"second-moment"};
  WapEvaluator eval(spec);
  for (int n = 0; n <= opt.max_size; ++n) {
    check(result, "n=" + std::to_string(n) + " second moment closed form", [&] {
      return plancherel_second_moment_bruteforce(eval, n) ==
             plancherel_second_moment_closed(spec, n);
    });
  }
  for (int n = 0; n <= opt.max_size; ++n) {
    check(result, "n=" + std::to_string(n) + " diagonal Schur-square sum", [&] {
      PSym sum;
      for (const Partition& lambda : partitions_of(n)) {
        const PSym s = schur(lambda);
        sum += s * s;
      }
      return sum == cauchy_diagonal(n);
    });
  }
  // Exponential-root family: the second-moment sequence stays in the family,
  // so the closed form collapses to B_n(x^2).
  if (auto params = spec.exp_rt_params()) {
    const auto& [alpha, r] = *params;
    if (r >= 2) {
      const AppellSpec b = preset_exp_rt(Rat(alpha * alpha * r), r);
      for (int n = 0; n <= opt.max_size; ++n) {
        check(result, "n=" + std::to_string(n) + " family second moment B_n(x^2)",
              [&] {
                return plancherel_second_moment_bruteforce(eval, n) ==
                       compose(appell_poly(b, n), Poly::monomial(2));
              });
      }
    }
    // The half-negative quadratic case collapses further: the second moment
    // is the conjugate-rescaled polynomial evaluated on ix^2, computed in
    // exact cyclotomic arithmetic.
    if (r == 2 && alpha == Rat(-1, 2)) {
      const CyclotomicField field(4);
      for (int n = 0; n <= opt.max_size; ++n) {
        check(result, "n=" + std::to_string(n) + " quartic-root transform", [&] {
          const Poly m = plancherel_second_moment_bruteforce(eval, n);
          const Poly a = appell_poly(spec, n);
          for (int j = 0; j <= m.degree().value_or(0); ++j) {
            if (j % 2 != 0 && m.coeff(j) != 0) return false;
          }
          for (int k = 0; k <= n; ++k) {
            // i^{k-n} * [x^k] A_n must equal [x^{2k}] of the second moment.
            const Cyclo want = field.zeta(k - n) * a.coeff(k);
            if (!want.is_rational()) return false;
            if (want.as_rational() != m.coeff(2 * k)) return false;
          }
          return true;
        });
      }
    }
  }
  return result;
}

SuiteResult suite_variance_bound(const AppellSpec& spec, const VerifyOptions& opt) {
  SuiteResult result{"variance-bound"};
  WapEvaluator eval(spec);
  for (int n = 0; n <= opt.max_size; ++n) {
    check(result, "n=" + std::to_string(n) + " variance degree bound", [&] {
      const Poly mean = plancherel_mean_bruteforce(eval, n);
      const Poly second = plancherel_second_moment_bruteforce(eval, n);
      const Poly variance = second - mean * mean;
      if (n < 2) return variance.is_zero();
      const auto deg = variance.degree();
      return !deg.has_value() || *deg <= 2 * n - 4;
    });
  }
  return result;
}

SuiteResult suite_newton_schur(const AppellSpec&, const VerifyOptions& opt) {
  SuiteResult result{"newton-schur"};
  for (int n = 1; n <= opt.max_size; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      check(result, tag(lambda) + " first-order Schur identity", [&] {
        auto [lhs, rhs] = schur_newton_lhs_rhs(lambda);
        return lhs == rhs;
      });
    }
  }
  return result;
}

SuiteResult suite_hook_formula(const AppellSpec&, const VerifyOptions& opt) {
  SuiteResult result{"hook-formula"};
  // Lattice DP for tableau counts, built level by level.
  std::map<Partition, Int> previous{{Partition(), Int(1)}};
  for (int n = 0; n <= opt.max_size; ++n) {
    std::map<Partition, Int> current;
    if (n == 0) {
      current = previous;
    } else {
      for (const Partition& lambda : partitions_of(n)) {
        Int total(0);
        for (const Partition& mu : covers_down(lambda)) total += previous.at(mu);
        current.emplace(lambda, total);
      }
    }
    Int sum_squares(0);
    for (const auto& [lambda, dp_count] : current) {
      check(result, tag(lambda) + " hook formula equals lattice DP",
            [&] { return syt_count(lambda) == dp_count; });
      sum_squares += dp_count * dp_count;

      check(result, tag(lambda) + " degree-vector hook identity", [&] {
        const std::vector<int> degrees = degree_vector(lambda);
        Int rhs(1);
        for (int d : degrees) rhs *= factorial(d);
        return hook_product(lambda) * vandermonde(degrees) == rhs;
      });

      check(result, tag(lambda) + " rim hooks match hook-length multiset", [&] {
        std::map<int, int> hook_counts;
        for (int i = 1; i <= lambda.length(); ++i) {
          for (int j = 1; j <= lambda.part(i); ++j) {
            hook_counts[hook_length(lambda, i, j)] += 1;
          }
        }
        for (int k = 1; k <= lambda.size(); ++k) {
          const auto hooks = rim_hooks_down(lambda, k);
          for (const RimHook& hook : hooks) {
            if (!is_rim_hook(hook.outer, hook.inner)) return false;
            if (hook.outer.size() - hook.inner.size() != k) return false;
          }
          auto it = hook_counts.find(k);
          const int expected = it == hook_counts.end() ? 0 : it->second;
          if (static_cast<int>(hooks.size()) != expected) return false;
        }
        return true;
      });
    }
    check(result, "n=" + std::to_string(n) + " squared counts sum to n!",
          [&] { return sum_squares == factorial(n); });
    previous = std::move(current);
  }
  return result;
}

SuiteResult suite_mn_rule(const AppellSpec&, const VerifyOptions& opt) {
  SuiteResult result{"mn-rule"};
  for (int k = 1; k <= opt.k_max; ++k) {
    for (const Partition& lambda : partitions_up_to(opt.max_size)) {
      check(result, tag(lambda) + " k=" + std::to_string(k) + " expansion", [&] {
        PSym sum;
        for (const auto& [gamma, sign] : mn_multiply_p(k, lambda)) {
          sum += schur(gamma) * Rat(sign);
        }
        return sum == p_gen(k) * schur(lambda);
      });
    }
  }
  return result;
}

SuiteResult suite_dual_jacobi_trudi(const AppellSpec&, const VerifyOptions& opt) {
  SuiteResult result{"dual-jacobi-trudi"};
  for (const Partition& lambda : partitions_up_to(opt.max_size)) {
    check(result, tag(lambda) + " dual determinant gives the conjugate", [&] {
      return schur_via_dual_jacobi_trudi(lambda) == schur(conjugate(lambda));
    });
    check(result, tag(lambda) + " omega swaps conjugates", [&] {
      return omega(schur(lambda)) == schur(conjugate(lambda));
    });
    check(result, tag(lambda) + " omega is an involution", [&] {
      const PSym s = schur(lambda);
      return omega(omega(s)) == s;
    });
  }
  for (int m = 1; m <= opt.max_size; ++m) {
    check(result, "omega exchanges the degree-" + std::to_string(m) + " generators",
          [&] { return omega(h_gen(m)) == e_gen(m) && omega(e_gen(m)) == h_gen(m); });
  }
  return result;
}

SuiteResult suite_rho_transform(const AppellSpec& spec, const VerifyOptions& opt) {
  SuiteResult result{"rho-transform"};
  const auto params = spec.exp_rt_params();
  if (!params) {
    // Only defined for the exponential-root family.
    result.skipped = static_cast<long>(partitions_up_to(opt.max_size).size());
    return result;
  }
  const auto& [alpha, r] = *params;
  for (const Partition& lambda : partitions_up_to(opt.max_size)) {
    check(result, tag(lambda) + " root-of-unity conjugation transform",
          [&] { return exp_rt_dual_transform_check(alpha, r, lambda); });
  }
  return result;
}

using SuiteFn = SuiteResult (*)(const AppellSpec&, const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"appell", &suite_appell},
      {"routes", &suite_routes},
      {"derivative", &suite_derivative},
      {"topdown", &suite_topdown},
      {"genrec", &suite_genrec},
      {"dual", &suite_dual},
      {"double-dual", &suite_double_dual},
      {"self-dual", &suite_self_dual},
      {"integrality", &suite_integrality},
      {"mean", &suite_mean},
      {"second-moment", &suite_second_moment},
      {"variance-bound", &suite_variance_bound},
      {"newton-schur", &suite_newton_schur},
      {"hook-formula", &suite_hook_formula},
      {"mn-rule", &suite_mn_rule},
      {"dual-jacobi-trudi", &suite_dual_jacobi_trudi},
      {"rho-transform", &suite_rho_transform},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suite_table()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const AppellSpec& spec,
                      const VerifyOptions& options) {
  for (const auto& [candidate, fn] : suite_table()) {
    if (candidate == name) return fn(spec, options);
  }
  throw std::invalid_argument("unknown identity '" + name + "'");
}

std::vector<SuiteResult> run_verify(const std::string& identity,
                                    const AppellSpec& spec,
                                    const VerifyOptions& options) {
  std::vector<SuiteResult> results;
  if (identity == "all") {
    for (const auto& [name, fn] : suite_table()) {
      results.push_back(fn(spec, options));
    }
  } else {
    results.push_back(run_suite(identity, spec, options));
  }
  return results;
}

}  // namespace wappell
