#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "wappell/appell.hpp"
#include "wappell/partition.hpp"
#include "wappell/polynomial.hpp"
#include "wappell/rational.hpp"

namespace wappell {

// Element of the ring of symmetric functions written in the power-sum basis:
// a finite Rat-linear combination of monomials p_mu = p_{mu_1} p_{mu_2} ...,
// keyed by the index partition mu (p_empty = 1). The zero element has an
// empty term map; stored coefficients are never zero.
class PSym {
 public:
  PSym() = default;  // zero
  explicit PSym(const Rat& constant);  // constant * p_empty

  static PSym one() { return PSym(Rat(1)); }
  static PSym p_monomial(const Partition& mu, const Rat& coeff = Rat(1));

  const std::map<Partition, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(const Partition& mu) const;
  // Degree of a homogeneous element; nullopt for zero or mixed degrees.
  std::optional<int> homogeneous_degree() const;

  PSym& operator+=(const PSym& o);
  PSym& operator-=(const PSym& o);
  PSym operator-() const;
  friend PSym operator+(PSym a, const PSym& b) { return a += b; }
  friend PSym operator-(PSym a, const PSym& b) { return a -= b; }
  friend PSym operator*(const PSym& a, const PSym& b);
  friend PSym operator*(const PSym& a, const Rat& c);
  friend PSym operator*(const Rat& c, const PSym& a) { return a * c; }
  friend bool operator==(const PSym&, const PSym&) = default;

 private:
  void add_term(const Partition& mu, const Rat& coeff);
  std::map<Partition, Rat> terms_;
};

// p_m as an element; m >= 1 ("p_0 undefined" otherwise).
PSym p_gen(int m);

// Complete homogeneous h_m in the p-basis (exponential generating relation);
// h_0 = 1, zero for negative m. Memoized.
PSym h_gen(int m);

// Elementary e_m in the p-basis, expanded from its own generating series
// (independent of omega); e_0 = 1, zero for negative m. Memoized.
PSym e_gen(int m);

// Schur function s_lambda in the p-basis via the Jacobi-Trudi determinant
// det[h_{lambda_i - i + j}]. Memoized per partition.
PSym schur(const Partition& lambda);

// Dual determinant det[e_{lambda_i - i + j}] (equals schur of the conjugate;
// kept separate so the equality stays an independent check).
PSym schur_via_dual_jacobi_trudi(const Partition& lambda);

// The involution p_m -> (-1)^{m-1} p_m, extended multiplicatively.
PSym omega(const PSym& f);

// Formal partial derivative with respect to p_1.
PSym d_dp1(const PSym& f);

// Murnaghan-Nakayama expansion of p_k * s_lambda: signed Schur indices
// (gamma, (-1)^height) over the rim hooks of size k added to lambda.
std::vector<std::pair<Partition, int>> mn_multiply_p(int k, const Partition& lambda);

// H(lambda) * s_lambda expanded in the p-basis; all coefficients are
// integers (InternalError otherwise).
std::map<Partition, Int> augmented_schur_p_integral(const Partition& lambda);

// Applies the ring homomorphism determined by the spec: p_1 -> x + c_1 and
// p_k -> c_k / (k-1)! for k >= 2, extended linearly and multiplicatively.
Poly phi_apply(const AppellSpec& spec, const PSym& f);

// Both sides of the degree-n first-order identity in the p-basis:
// lhs = n * s_lambda, rhs = sum_{k=1}^{n} p_k * (signed rim-hook-removal
// expansion of s_lambda), computed through independent code paths.
std::pair<PSym, PSym> schur_newton_lhs_rhs(const Partition& lambda);

// [t^n] of exp(sum_k p_k^2 t^k / k): equals the diagonal Schur sum
// sum_{lambda of n} s_lambda^2 (used as an independent oracle).
PSym cauchy_diagonal(int n);

}  // namespace wappell
