#pragma once

#include <map>
#include <mutex>
#include <set>
#include <string>

#include "wappell/appell.hpp"
#include "wappell/partition.hpp"
#include "wappell/polynomial.hpp"

namespace wappell {

// How to construct the partition-indexed polynomial A_lambda.
enum class Route {
  direct,        // Wronskian determinant divided by the Vandermonde factor
  via_phi,       // homomorphism image of the hook-scaled Schur function
  recurrence,    // bottom-up lattice recurrence
  cross_checked  // all three, compared coefficientwise (RouteMismatch on drift)
};

Route parse_route(const std::string& text);  // direct|phi|recurrence|cross
std::string route_name(Route route);

// Caching evaluator for one spec: memoizes every route per partition, so
// verification sweeps over many partitions do not recompute shared values.
// Thread-safe; the map-backed caches hand out stable references.
class WapEvaluator {
 public:
  explicit WapEvaluator(AppellSpec spec);

  const AppellSpec& spec() const { return spec_; }

  const Poly& direct(const Partition& lambda);
  const Poly& via_phi(const Partition& lambda);
  const Poly& recurrence(const Partition& lambda);
  const Poly& wap(const Partition& lambda, Route route = Route::cross_checked);

 private:
  const Poly& rec_impl(const Partition& lambda);

  AppellSpec spec_;
  std::map<Partition, Poly> direct_cache_;
  std::map<Partition, Poly> phi_cache_;
  std::map<Partition, Poly> rec_cache_;
  std::set<Partition> cross_checked_ok_;
  std::recursive_mutex mu_;
};

// One-shot conveniences over a fresh evaluator.
Poly wap_direct(const AppellSpec& spec, const Partition& lambda);
Poly wap_via_phi(const AppellSpec& spec, const Partition& lambda);
Poly wap_recurrence(const AppellSpec& spec, const Partition& lambda);
Poly wap(const AppellSpec& spec, const Partition& lambda,
         Route route = Route::cross_checked);

// F_lambda * d/dx A_lambda = |lambda| * sum over covered mu of F_mu A_mu.
bool derivative_identity_check(WapEvaluator& eval, const Partition& lambda);
bool derivative_identity_check(const AppellSpec& spec, const Partition& lambda);

// k = 1: (|lambda|+1)(x + c_1) F_lambda A_lambda = sum over covering gamma of
// F_gamma A_gamma. k >= 2: k c_k C(|lambda|+k, k) F_lambda A_lambda equals the
// height-signed sum over rim hooks of size k added to lambda.
bool topdown_check(WapEvaluator& eval, const Partition& lambda, int k);
bool topdown_check(const AppellSpec& spec, const Partition& lambda, int k);

// The bottom-up recurrence read as an identity over independently constructed
// polynomials (direct route on both sides).
bool generating_recurrence_check(WapEvaluator& eval, const Partition& lambda);

// A_lambda of the dual spec equals A of the conjugate partition; also checks
// the defining derivative property of the dual sequence at degree |lambda|.
bool dual_check(WapEvaluator& eval, WapEvaluator& dual_eval, const Partition& lambda);
bool dual_check(const AppellSpec& spec, const Partition& lambda);

// For the exponential-root family: conjugating the index matches the exact
// root-of-unity rescaling A_{lambda'}(x) = rho^{|lambda|} A_lambda(x / rho)
// with rho = -zeta_{2r}, verified in cyclotomic arithmetic.
bool exp_rt_dual_transform_check(const Rat& alpha, int r, const Partition& lambda);

// When c_k/(k-1)! is an integer for all k <= |lambda|, A_lambda must have
// integer coefficients. Returns true when that holds or when the hypothesis
// does not apply (use integrality_hypothesis to distinguish).
bool integrality_check(const AppellSpec& spec, const Partition& lambda,
                       Route route = Route::cross_checked);

// A partition-indexed family built directly from constants attached to
// partitions (z_lambda = A_lambda(0)); missing entries are zero. The empty
// partition must carry 1.
struct AppellNet {
  AppellNet();  // just z_empty = 1
  explicit AppellNet(std::map<Partition, Rat> constants);
  std::map<Partition, Rat> constants;
};

// F_lambda A_lambda = sum over mu <= lambda of C(|lambda|,|mu|)
// F_{lambda/mu} F_mu z_mu x^{|lambda|-|mu|}, solved for A_lambda.
Poly appell_net_poly(const AppellNet& net, const Partition& lambda);

// The net of a spec: z_lambda = A_lambda(0) for all |lambda| <= max_size.
AppellNet net_from_spec(const AppellSpec& spec, int max_size);

}  // namespace wappell
