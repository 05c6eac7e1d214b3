#pragma once

#include "wappell/appell.hpp"
#include "wappell/polynomial.hpp"
#include "wappell/wapoly.hpp"

namespace wappell {

// Statistics of the hook-weighted (F_lambda^2 / n!) average over partitions
// of n. Every closed form is recomputed by brute force and compared exactly;
// a mismatch raises TheoremViolation.
struct PlancherelReport {
  int n = 0;
  Poly mean;
  Poly second_moment;
  Poly variance;
  // Claimed for n >= 2: deg(variance) <= 2n - 4 (leading terms cancel).
  bool variance_degree_bound_ok = true;
};

// sum over lambda of n of F_lambda^2 A_lambda / n!.
Poly plancherel_mean_bruteforce(WapEvaluator& eval, int n);
// Closed form A_1(x)^n.
Poly plancherel_mean_closed(const AppellSpec& spec, int n);
// Both, compared; throws TheoremViolation on mismatch.
Poly plancherel_mean(const AppellSpec& spec, int n);

// sum over lambda of n of F_lambda^2 A_lambda^2 / n!.
Poly plancherel_second_moment_bruteforce(WapEvaluator& eval, int n);
// Closed form B_n((x + c_1)^2) where B is second_moment_spec(spec).
Poly plancherel_second_moment_closed(const AppellSpec& spec, int n);
Poly plancherel_second_moment(const AppellSpec& spec, int n);

// Assembles mean/second moment/variance with all cross-checks.
PlancherelReport plancherel_report(const AppellSpec& spec, int n);

// Laguerre-family second moment in closed form: the brute-force average
// equals (-1)^n l_n^{(-a^2)}(-x^2 - 2 a x).
bool laguerre_second_moment_check(const Rat& alpha, int n);

}  // namespace wappell
