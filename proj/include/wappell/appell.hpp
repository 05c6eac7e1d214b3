#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wappell/polynomial.hpp"
#include "wappell/rational.hpp"

namespace wappell {

namespace detail {
struct AppellState;
}

// An Appell sequence A_0, A_1, ... (A_0 = 1, A_n' = n A_{n-1}) pinned down by
// its cumulant stream c_1, c_2, ... Moments z_k = A_k(0) are derived through
// the exact conversion z_n = c_n + sum_{i=1}^{n-1} C(n-1,i) c_{n-i} z_i and
// cached, as are the polynomials themselves. Copies share state; a spec is
// immutable after construction apart from its internal caches, which are
// mutex-guarded and behave as if the spec were a pure value.
class AppellSpec {
 public:
  const std::string& name() const;

  Rat cumulant(int k) const;            // k >= 1
  Rat moment(int k) const;              // k >= 0, z_0 = 1
  std::vector<Rat> cumulants_upto(int n) const;  // c_1..c_n
  std::vector<Rat> moments_upto(int n) const;    // z_0..z_n

  // Set for members of the exponential-root family (and its duals); lets
  // callers recognise the family without string matching on the name.
  std::optional<std::pair<Rat, int>> exp_rt_params() const;

  // True when both specs share the same underlying state object (used for
  // cache keying, not mathematical equality).
  bool same_state(const AppellSpec& o) const { return state_ == o.state_; }

 private:
  explicit AppellSpec(std::shared_ptr<detail::AppellState> state);
  std::shared_ptr<detail::AppellState> state_;

  friend AppellSpec make_spec(std::shared_ptr<detail::AppellState> state);
  friend Poly appell_poly(const AppellSpec& spec, int n);
};

// --- presets ---------------------------------------------------------------

// All cumulants zero: A_n = x^n.
AppellSpec preset_monomial();
// Single nonzero cumulant c_r = r! * alpha; r >= 1.
AppellSpec preset_exp_rt(const Rat& alpha, int r);
// exp_rt with r = 1: A_n = (x + alpha)^n.
AppellSpec preset_shifted_monomial(const Rat& alpha);
// Probabilists' Hermite: exp_rt(-1/2, 2).
AppellSpec preset_hermite();
// exp_rt(-4/3, 3).
AppellSpec preset_yablonskii_vorobiev();
// Monic Laguerre-type sequence: c_k = (-1)^{k-1} (k-1)! alpha.
AppellSpec preset_laguerre(const Rat& alpha);
// Jacobi-type sequence with closed-form moments z_k = 2^k (-a)_k / (-a-b)_k;
// cumulants derived on demand. Requesting order k with a+b a non-negative
// integer < k raises std::invalid_argument ("degenerate Jacobi parameters").
AppellSpec preset_jacobi(const Rat& alpha, const Rat& beta);

// Explicit finite streams; entries beyond the list are zero cumulants.
AppellSpec spec_from_cumulants(std::vector<Rat> cumulants);
// z_0 must be 1, otherwise std::invalid_argument ("not an Appell moment
// sequence"). Cumulants beyond the listed orders are taken to be zero.
AppellSpec spec_from_moments(std::vector<Rat> moments);

// Parses the CLI spec grammar: monomial | hermite | yablonskii |
// exp-rt:a,r | laguerre:a | jacobi:a,b | cumulants:c1,c2,... |
// moments:1,z1,z2,...  (rationals as p/q).
AppellSpec parse_spec(const std::string& text);

// --- derived sequences -----------------------------------------------------

// Cumulant stream c*_k = (-1)^{k-1} c_k (moment stream of the conjugate
// construction; applying it twice returns to the original stream).
AppellSpec dual(const AppellSpec& spec);

// The sequence governing second moments under the hook-weighted average:
// c^B_1 = 0 and c^B_k = c_k^2 / (k-1)! for k >= 2.
AppellSpec second_moment_spec(const AppellSpec& spec);

// Same spec with the first cumulant replaced by zero.
AppellSpec centralize(const AppellSpec& spec);

// --- conversions and evaluation --------------------------------------------

// z_0..z_n derived from the spec's cumulants.
std::vector<Rat> moments_from_cumulants(const AppellSpec& spec, int n);

// c_1..c_n from an explicit moment list z_0..z_n; z_0 must be 1, otherwise
// std::invalid_argument ("not an Appell moment sequence").
std::vector<Rat> cumulants_from_moments(const std::vector<Rat>& moments);

// A_n(x) = sum_k C(n,k) z_k x^{n-k}; monic of degree n.
Poly appell_poly(const AppellSpec& spec, int n);

// True when c_k / (k-1)! is an integer for every k = 1..order.
bool integrality_hypothesis(const AppellSpec& spec, int order);

// Fault-injection hook for self-testing the verification suites: materialises
// both streams to the given order, then perturbs cumulant k by delta while
// deliberately leaving the derived moments untouched. The resulting spec is
// internally inconsistent, which consistency suites must detect; it refuses
// requests beyond the materialised order.
AppellSpec corrupted_for_testing(const AppellSpec& spec, int k, const Rat& delta,
                                 int order);

}  // namespace wappell
