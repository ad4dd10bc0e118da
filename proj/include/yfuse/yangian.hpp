#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "yfuse/combinatorics.hpp"
#include "yfuse/linalg.hpp"
#include "yfuse/mixed_tensor.hpp"
#include "yfuse/rational_function.hpp"
#include "yfuse/sampling.hpp"

namespace yfuse {

/// T(x) = sum_ab E_ab (x) T_ab(x) acting on C^N (x) V with dim V = D. The
/// auxiliary factor is the most significant digit, so block (a, b) of the
/// (N D) x (N D) matrix over Q(x) is T_ab(x).
struct RepresentedSeries {
  int N = 0;
  long D = 0;
  MatF T;

  MatF block(int a, int b) const { return T.block(a * D, b * D, D, D); }
  /// Coefficient matrices T^{(k)}_{ab} of x^{-k} in the expansion at infinity,
  /// for k = 1..K, ordered (k, a, b) lexicographically.
  std::vector<MatQ> generators(int K) const;
  /// Whether every entry tends to the identity at infinity.
  bool has_identity_leading_term() const;
};

/// Matrices rho(E_ab), a, b < K, of a representation of gl_K on a space of dimension D.
struct LieAlgebraRep {
  int K = 0;
  long D = 0;
  std::vector<MatQ> E;  // index a * K + b

  const MatQ& gen(int a, int b) const { return E[static_cast<std::size_t>(a * K + b)]; }
  /// [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb for all generators.
  bool satisfies_commutation_relations() const;
};

/// Coordinates with respect to a basis of an invariant subspace, using an
/// invertible square block of pivot rows.
class SubspaceCoordinates {
 public:
  explicit SubspaceCoordinates(const MatQ& spanning_columns);
  const MatQ& basis() const { return basis_; }
  long dim() const { return basis_.cols(); }
  /// Coordinates of the columns of v (which must lie in the subspace).
  MatQ coordinates(const MatQ& v) const;
  MatF coordinates(const MatF& v) const;
  /// The restriction of an operator preserving the subspace.
  MatQ restrict(const MatQ& op) const { return coordinates(mul(op, basis_)); }

 private:
  MatQ basis_;
  std::vector<Eigen::Index> pivot_rows_;
  MatQ pivot_inverse_;
};

/// The module V(y_ntilde)* (x) ... (x) V(y_1)* (x) V(z_1) (x) ... (x) V(z_n) on W_{n, ntilde}:
/// T(x) -> R*_{01}(x, y_ntilde) ... R*_{0 ntilde}(x, y_1) R_{0, ntilde+1}(x, z_1) ... R_{0, ntilde+n}(x, z_n).
RepresentedSeries rho_mixed(int N, const std::vector<Rational>& y, const std::vector<Rational>& z);
/// The reversed product R_{0, ntilde+n}(x, z_n) ... R_{0, ntilde+1}(x, z_1) R*_{0 ntilde}(x, y_1) ... R*_{01}(x, y_ntilde).
RepresentedSeries sigma_mixed(int N, const std::vector<Rational>& y, const std::vector<Rational>& z);
/// The pullback of the natural gl_N action: T(x) -> 1 + (sum_i Q_{0i} - sum_j P_{0j}) / x.
RepresentedSeries pi_N_action(int N, int n, int n_dual);

/// The defining relations (x - y)[T_ab(x), T_cd(y)] = T_cb(x) T_ad(y) - T_cb(y) T_ad(x),
/// checked exactly at sample pairs (x, y) away from poles.
bool check_RTT(const RepresentedSeries& t, int samples = 3, std::uint64_t seed = kDefaultSeed);

/// T(x) -> g(x) T(x); g must tend to 1 at infinity.
RepresentedSeries twist(const RepresentedSeries& t, const RationalFunction& g);
/// T(x) -> T(x - z).
RepresentedSeries shift(const RepresentedSeries& t, const Rational& z);
/// The module T(x) -> (block (a, b) of T(x)^{-1})^T on the dual space.
RepresentedSeries dual_module(const RepresentedSeries& t);
/// Restriction of the action to an invariant subspace spanned by the columns.
RepresentedSeries restrict_series(const RepresentedSeries& t, const SubspaceCoordinates& sub);

/// g_mu(x) = prod_i (x - mu_i + i)(x + i - 1) / ((x - mu_i + i - 1)(x + i)).
RationalFunction g_mu(const Partition& mu);
/// prod_k (1 - 1/(x - c_k)^2)^{-1} over the contents of a standard tableau.
RationalFunction g_from_contents(const StandardTableau& lambda);
/// g_lambda(x) equals the content product for the tableau.
bool check_fact(const StandardTableau& lambda);

/// The natural gl_L action on the mixed tensor space with L = space.N().
LieAlgebraRep mixed_tensor_gl_rep(const MixedTensorSpace& space);
/// Restriction of a Lie algebra representation to an invariant subspace.
LieAlgebraRep restrict_rep(const LieAlgebraRep& rep, const SubspaceCoordinates& sub);

/// Y(gl_N) -> U(gl_{N+M}) composed with a representation of gl_{N+M}:
/// B(x) = 1 - sum E_ab (x) rho(E_ba) / x, C(x) = B(-x)^{-1}, D(x) = the N x N
/// auxiliary block of C, T(x) = D(-x)^{-1}.
RepresentedSeries pi_NM_action(const LieAlgebraRep& rep, int N, int M);

/// The module Hom_{GL_M}(V_{mu mu~}, V_{lambda lambda~}) over Y(gl_N) with its twist.
struct HomModule {
  RepresentedSeries series;
  long hom_dim = 0;
  long dim_lambda = 0;  // dimension of V_{lambda lambda~} of GL_{N+M}
  long dim_mu = 0;      // dimension of V_{mu mu~} of GL_M
};

/// Throws EmptyHom when the branching space vanishes and InvalidInput when
/// the bounds lambda'_1 + lambda~'_1 <= N + M, mu'_1 + mu~'_1 <= M fail.
HomModule build_VmuMut_module(const Partition& lambda, const Partition& lambda_tilde, const Partition& mu,
                              const Partition& mu_tilde, int N, int M);

/// The submodule V_{Omega Omega~}: the restriction of rho_mixed with
/// z_k = c_k(Omega), y_k = -c_k(Omega~) - M to the image of F_{Omega Omega~}.
RepresentedSeries V_OmOmt_module(const StandardTableau& omega, const StandardTableau& omega_tilde, int N, int M);

/// F rho_sigma-intertwining: rho(T(x)) (1 (x) F) == (1 (x) F) sigma(T(x)) as an exact
/// identity of matrices over Q(x), with the given evaluation parameters.
bool check_intertwiner(const StandardTableau& omega, const StandardTableau& omega_tilde, int N, int M,
                       const std::vector<Rational>& y, const std::vector<Rational>& z);
/// The same with the parameters z_k = c_k(Omega), y_k = -c_k(Omega~) - M.
bool verify_intertwiner_property(const StandardTableau& omega, const StandardTableau& omega_tilde, int N, int M);

/// Evidence that two modules are equivalent.
struct EquivalenceCertificate {
  bool same_dimension = false;
  long solution_dim = 0;     // dimension of the space of intertwiners
  bool invertible = false;   // the (unique up to scalar) intertwiner is invertible
  long commutant_a = 0;      // commutant dimensions of both sides
  long commutant_b = 0;
  int K = 0;                 // number of series coefficients used
  MatQ witness;              // X with X T_a = T_b X
  bool pass() const { return same_dimension && solution_dim == 1 && invertible && commutant_a == 1 && commutant_b == 1; }
};

/// Solves for intertwiners between the generator sets T^{(1..K)}, increasing
/// K from 2 until the solution space is unchanged for two consecutive steps
/// (K <= 2 D).
EquivalenceCertificate certify_equivalence(const RepresentedSeries& a, const RepresentedSeries& b);

/// The branching module and V_{Omega Omega~} are equivalent (column tableaux
/// realize V_{lambda lambda~} and V_{mu mu~}).
EquivalenceCertificate verify_module_equivalence(const Partition& lambda, const Partition& lambda_tilde,
                                                 const Partition& mu, const Partition& mu_tilde, int N, int M,
                                                 const StandardTableau& omega, const StandardTableau& omega_tilde);

/// Exterior powers of evaluation modules.
struct ExteriorReport {
  bool commutes_vector = false;   // R_01 ... R_0n (1 (x) A_n) = (1 (x) A_n) R_0n ... R_01
  bool commutes_dual = false;     // the same for R* on dual factors
  bool top_value = true;          // n = N: T_ab -> delta_ab (x - z - 1)/(x - z); vacuous when n < N
  bool top_dual_value = true;     // n = N: reciprocal on the dual exterior power
  bool dual_equivalence = false;  // antipode dual of V_n(z) equivalent to V_n(z)'
  bool all() const { return commutes_vector && commutes_dual && top_value && top_dual_value && dual_equivalence; }
};

ExteriorReport verify_exterior_powers(int N, int n, const Rational& z);

/// The skew shape xi / eta and r = lambda~_1 making V_{Omega Omega~} polynomial.
struct PolynomialShape {
  Partition xi, eta;
  int r = 0;
};
PolynomialShape polynomial_shape(const Partition& lambda, const Partition& lambda_tilde, const Partition& mu,
                                 const Partition& mu_tilde, int N, int M);

/// V_{Omega Omega~} is equivalent to the pullback of V_Gamma(-r) by the twist
/// g(x) = g_{lambda~}(-x - M) (x + M + r)/(x + M), Gamma the column tableau of xi / eta.
EquivalenceCertificate verify_polynomial_twist(const Partition& lambda, const Partition& lambda_tilde,
                                               const Partition& mu, const Partition& mu_tilde, int N, int M,
                                               const StandardTableau& omega, const StandardTableau& omega_tilde);

}  // namespace yfuse
