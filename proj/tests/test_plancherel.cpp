#include "doctest.h"
#include "wappell/appell.hpp"
#include "wappell/plancherel.hpp"
#include "wappell/polynomial.hpp"
#include "wappell/rational.hpp"
#include "wappell/wapoly.hpp"

#include <vector>

using namespace wappell;

namespace {
Poly from_ints(const std::vector<int>& low_to_high) {
  std::vector<Rat> c;
  for (int v : low_to_high) c.emplace_back(v);
  return Poly(c);
}
}  // namespace

TEST_CASE("hook-squared weighted averages, quadratic family") {
  const AppellSpec spec = preset_hermite();
  WapEvaluator eval(spec);
  CHECK(plancherel_mean_bruteforce(eval, 0) == Poly::one());
  CHECK(plancherel_mean_bruteforce(eval, 2) == Poly::monomial(2));
  CHECK(plancherel_mean_closed(spec, 2) == Poly::monomial(2));
  CHECK(plancherel_mean(spec, 2) == Poly::monomial(2));
  CHECK(plancherel_second_moment_bruteforce(eval, 2) ==
        from_ints({1, 0, 0, 0, 1}));
  CHECK(plancherel_second_moment_closed(spec, 2) == from_ints({1, 0, 0, 0, 1}));
}

TEST_CASE("mean is the n-th power of the linear polynomial") {
  for (const char* name :
       {"monomial", "hermite", "yablonskii", "laguerre:1", "jacobi:1/3,1/5"}) {
    const AppellSpec spec = parse_spec(name);
    WapEvaluator eval(spec);
    for (int n = 0; n <= 6; ++n) {
      CHECK(plancherel_mean_bruteforce(eval, n) ==
            poly_pow(appell_poly(spec, 1), n));
    }
  }
  // alpha = 1 makes the mean (x+1)^n.
  CHECK(plancherel_mean(preset_laguerre(Rat(1)), 3) == from_ints({1, 3, 3, 1}));
}

TEST_CASE("second moment matches the squared-cumulant closed form") {
  for (const char* name : {"hermite", "laguerre:2", "cumulants:1,1/2"}) {
    const AppellSpec spec = parse_spec(name);
    for (int n = 0; n <= 6; ++n) {
      CHECK(plancherel_second_moment(spec, n) ==
            plancherel_second_moment_closed(spec, n));
    }
  }
}

TEST_CASE("full report with the degree bound on the variance") {
  const PlancherelReport r2 = plancherel_report(preset_hermite(), 2);
  CHECK(r2.n == 2);
  CHECK(r2.mean == Poly::monomial(2));
  CHECK(r2.second_moment == from_ints({1, 0, 0, 0, 1}));
  CHECK(r2.variance == Poly::one());
  CHECK(r2.variance_degree_bound_ok);

  const PlancherelReport r0 = plancherel_report(preset_laguerre(Rat(2)), 0);
  CHECK(r0.variance.is_zero());
  CHECK(r0.variance_degree_bound_ok);
  const PlancherelReport r1 = plancherel_report(preset_laguerre(Rat(2)), 1);
  CHECK(r1.variance.is_zero());
  CHECK(r1.variance_degree_bound_ok);

  // The monomial family is deterministic: variance identically zero.
  for (int n = 0; n <= 6; ++n) {
    CHECK(plancherel_report(preset_monomial(), n).variance.is_zero());
  }
  for (int n = 2; n <= 7; ++n) {
    const PlancherelReport r = plancherel_report(preset_laguerre(Rat(1)), n);
    CHECK(r.variance_degree_bound_ok);
    const auto deg = r.variance.degree();
    REQUIRE(deg.has_value());
    CHECK(*deg <= 2 * n - 4);
  }
}

TEST_CASE("negated-square parameter closed form for the linear-cumulant family") {
  // Frozen oracle: alpha = 1, n = 2 gives x^4 + 4x^3 + 6x^2 + 4x + 2 on both
  // the brute-force and transformed sides.
  const AppellSpec spec = preset_laguerre(Rat(1));
  WapEvaluator eval(spec);
  CHECK(plancherel_second_moment_bruteforce(eval, 2) ==
        from_ints({2, 4, 6, 4, 1}));
  CHECK(laguerre_second_moment_check(Rat(1), 2));
  for (int n = 0; n <= 5; ++n) {
    CHECK(laguerre_second_moment_check(Rat(1), n));
    CHECK(laguerre_second_moment_check(Rat(3), n));
    CHECK(laguerre_second_moment_check(make_rat(1, 2), n));
  }
}
