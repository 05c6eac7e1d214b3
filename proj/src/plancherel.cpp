#include "wappell/plancherel.hpp"

#include <optional>

#include "wappell/error.hpp"
#include "wappell/partition.hpp"

namespace wappell {

namespace {

Poly hook_weighted_sum(WapEvaluator& eval, int n, bool squared) {
  Poly sum;
  for (const Partition& lambda : partitions_of(n)) {
    const Rat f(syt_count(lambda));
    const Poly& a = eval.wap(lambda);
    sum += (squared ? a * a : a) * Rat(f * f);
  }
  return exact_div_scalar(sum, Rat(factorial(n)));
}

}  // namespace

Poly plancherel_mean_bruteforce(WapEvaluator& eval, int n) {
  return hook_weighted_sum(eval, n, /*squared=*/false);
}

Poly plancherel_mean_closed(const AppellSpec& spec, int n) {
  return poly_pow(appell_poly(spec, 1), n);
}

Poly plancherel_mean(const AppellSpec& spec, int n) {
  WapEvaluator eval(spec);
  Poly brute = plancherel_mean_bruteforce(eval, n);
  Poly closed = plancherel_mean_closed(spec, n);
  if (!(brute == closed)) {
    throw TheoremViolation("hook-weighted mean mismatch for " + spec.name() +
                           " at n=" + std::to_string(n) + ": brute=" +
                           poly_to_string(brute) + " closed=" + poly_to_string(closed));
  }
  return brute;
}

Poly plancherel_second_moment_bruteforce(WapEvaluator& eval, int n) {
  return hook_weighted_sum(eval, n, /*squared=*/true);
}

Poly plancherel_second_moment_closed(const AppellSpec& spec, int n) {
  const Poly b = appell_poly(second_moment_spec(spec), n);
  return square_shift_argument(b, spec.cumulant(1));
}

Poly plancherel_second_moment(const AppellSpec& spec, int n) {
  WapEvaluator eval(spec);
  Poly brute = plancherel_second_moment_bruteforce(eval, n);
  Poly closed = plancherel_second_moment_closed(spec, n);
  if (!(brute == closed)) {
    throw TheoremViolation("hook-weighted second moment mismatch for " +
                           spec.name() + " at n=" + std::to_string(n) +
                           ": brute=" + poly_to_string(brute) +
                           " closed=" + poly_to_string(closed));
  }
  return brute;
}

PlancherelReport plancherel_report(const AppellSpec& spec, int n) {
  PlancherelReport report;
  report.n = n;
  WapEvaluator eval(spec);

  report.mean = plancherel_mean_bruteforce(eval, n);
  const Poly mean_closed = plancherel_mean_closed(spec, n);
  if (!(report.mean == mean_closed)) {
    throw TheoremViolation("hook-weighted mean mismatch for " + spec.name() +
                           " at n=" + std::to_string(n));
  }
  report.second_moment = plancherel_second_moment_bruteforce(eval, n);
  const Poly second_closed = plancherel_second_moment_closed(spec, n);
  if (!(report.second_moment == second_closed)) {
    throw TheoremViolation("hook-weighted second moment mismatch for " +
                           spec.name() + " at n=" + std::to_string(n));
  }
  report.variance = report.second_moment - report.mean * report.mean;
  if (n >= 2) {
    const std::optional<int> deg = report.variance.degree();
    report.variance_degree_bound_ok = !deg.has_value() || *deg <= 2 * n - 4;
  }
  return report;
}

bool laguerre_second_moment_check(const Rat& alpha, int n) {
  WapEvaluator eval(preset_laguerre(alpha));
  const Poly brute = plancherel_second_moment_bruteforce(eval, n);
  // (-1)^n l_n^{(-a^2)}(-x^2 - 2 a x).
  const Poly inner({Rat(0), Rat(-2) * alpha, Rat(-1)});
  Poly rhs = compose(appell_poly(preset_laguerre(Rat(-alpha * alpha)), n), inner);
  if (n % 2 != 0) rhs = -rhs;
  return brute == rhs;
}

}  // namespace wappell
