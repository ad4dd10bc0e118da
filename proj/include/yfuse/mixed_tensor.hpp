#pragma once

#include <string>
#include <utility>
#include <vector>

#include "yfuse/combinatorics.hpp"
#include "yfuse/linalg.hpp"
#include "yfuse/sampling.hpp"
#include "yfuse/tensor_ops.hpp"

namespace yfuse {

/// The space of mixed tensors: n_dual copies of the dual of C^N followed by
/// n copies of C^N. Factor labels run 1..n_dual (duals) then
/// n_dual+1..n_dual+n (vectors); the basis is the row-major product basis.
class MixedTensorSpace {
 public:
  static constexpr long kMaxDimension = 4096;

  MixedTensorSpace(int N, int n, int n_dual);

  int N() const { return N_; }
  int n() const { return n_; }
  int n_dual() const { return n_dual_; }
  int factors() const { return n_ + n_dual_; }
  long dim() const { return dim_; }

  /// 0-based digit position of the dual factor l (1 <= l <= n_dual).
  int dual_position(int l) const;
  /// 0-based digit position of the vector factor k (1 <= k <= n).
  int vector_position(int k) const;
  /// Whether the factor with the overall label (1-based) is a dual factor.
  bool is_dual_label(int label) const;
  /// true for vector factors, false for dual factors, by digit position.
  std::vector<bool> vector_flags() const;

  friend bool operator==(const MixedTensorSpace& a, const MixedTensorSpace& b) {
    return a.N_ == b.N_ && a.n_ == b.n_ && a.n_dual_ == b.n_dual_;
  }

 private:
  int N_, n_, n_dual_;
  long dim_;
};

/// w_0 = sum_a v*_a (x) v_a in the two-factor space (dual, vector), as a column.
MatQ w0(int N);

/// An exact operator on a mixed tensor space with a tag naming its construction.
struct TensorOperator {
  MixedTensorSpace space;
  MatQ matrix;
  std::string provenance;
};

/// P_kl exchanging the factors with overall labels k and l (both dual or
/// both vector; otherwise MixedFactorKinds).
TensorOperator perm_op(const MixedTensorSpace& space, int k, int l);
/// (P_ntilde, P_{n+ntilde}): reversal of the dual factors only, and of all factors.
std::pair<TensorOperator, TensorOperator> reversal_ops(const MixedTensorSpace& space);
/// Q on the dual factor l and the vector factor k: u (x) v -> <u, v> w_0.
TensorOperator contraction_insertion(const MixedTensorSpace& space, int l, int k);

/// The ordered product of (1 - P_kl / (x_k - x_l)) over k < l on the tensor
/// power of C^N along the fusion line, evaluated at its regular point.
TensorOperator F_Omega_op(const StandardTableau& omega, int N);

/// One factor (1 - coefficient * Q) of a product of contraction-insertions.
struct ContractionFactor {
  int dual = 0;    // dual factor label l
  int vector = 0;  // vector factor index k
  Rational coefficient;
};

/// The factors of G (vector index outer, dual index inner, both increasing)
/// with Q_{ntilde-l+1, ntilde+k} / (c_k(omega) + c_l(omega_tilde) + N + M);
/// throws DenominatorZero if a denominator vanishes.
std::vector<ContractionFactor> G_factors(const StandardTableau& omega, const StandardTableau& omega_tilde, int N,
                                         int M);

/// Applies prod factors (in list order) on the left or on the right of a.
MatQ apply_factors_left(const MixedTensorSpace& space, const std::vector<ContractionFactor>& factors, const MatQ& a);
MatQ apply_factors_right(const MixedTensorSpace& space, const MatQ& a, const std::vector<ContractionFactor>& factors);

/// (G, G') where G' multiplies the same factors in the reversed order.
std::pair<TensorOperator, TensorOperator> G_ops(const StandardTableau& omega, const StandardTableau& omega_tilde,
                                                int N, int M);

/// (P_ntilde F_omega_tilde P_ntilde) (x) F_omega on the mixed space.
TensorOperator reflected_tensor_op(const StandardTableau& omega, const StandardTableau& omega_tilde, int N);

/// F = G ((P_ntilde F_omega_tilde P_ntilde) (x) F_omega).
TensorOperator F_OmOmt_op(const StandardTableau& omega, const StandardTableau& omega_tilde, int N, int M);

/// G X == X G' with X the reflected tensor operator.
bool check_G_exchange(const StandardTableau& omega, const StandardTableau& omega_tilde, int N, int M);

/// The contraction pairing the dual factor l with the vector factor k,
/// as a map onto the mixed space with those two factors removed.
MatQ contraction_map(const MixedTensorSpace& space, int l, int k);
/// Basis (columns) of the traceless tensors: the common kernel of all contractions.
MatQ traceless_subspace(const MixedTensorSpace& space);

/// Whether op commutes with every E_ab of gl_N acting on the space.
bool commutes_with_gl(const MixedTensorSpace& space, const MatQ& op);

/// Whether the column spans of a and b coincide.
bool same_column_space(const MatQ& a, const MatQ& b);

/// Checks on F for straight tableaux with M = 0 (base dimension L = N).
struct SymmetrizerReport {
  bool orderings_agree = false;       // both ordered contraction products give F
  bool transpose_invariant = false;   // F^T == F in the product basis
  bool image_traceless = false;       // Q_ij F = 0 for every dual i and vector j
  bool image_intersection = false;    // im F = im((P F~ P) (x) F) intersected with the traceless tensors
  bool square_scalar = false;         // F^2 = F l!/dim U_lambda * l~!/dim U_lambda~
  bool rank_matches_weyl = false;     // rank F = dim of the irreducible rational representation
  bool equivariant = false;           // F commutes with gl_N
  long rank = 0;
  long weyl_dim = 0;
  bool all() const {
    return orderings_agree && transpose_invariant && image_traceless && image_intersection && square_scalar &&
           rank_matches_weyl && equivariant;
  }
};

SymmetrizerReport verify_symmetrizer_identities(const StandardTableau& lambda, const StandardTableau& lambda_tilde,
                                                int N);

/// Outcome of one R-matrix identity over all its index arrangements and samples.
struct IdentityResult {
  std::string name;
  int N = 0;
  int samples = 0;
  bool passed = false;
};

/// Yang R-matrix identities (braid, unitarity, and their contraction
/// analogues on mixed spaces of up to three factors) at sample points.
std::vector<IdentityResult> verify_rmatrix_identities(int N, int samples = 4, std::uint64_t seed = kDefaultSeed);

}  // namespace yfuse
