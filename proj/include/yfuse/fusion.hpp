#pragma once

#include <vector>

#include "yfuse/combinatorics.hpp"
#include "yfuse/group_algebra.hpp"
#include "yfuse/polynomial.hpp"
#include "yfuse/rational_function.hpp"

namespace yfuse {

/// f_ij(x, y) = 1 - (i j)/(x - y) in the group algebra of S_l (1-based indices).
template <typename Scalar>
GroupAlgebraElement<Scalar> f_pair(int l, int i, int j, const Scalar& x, const Scalar& y) {
  const Scalar d = x - y;
  if (is_zero(d)) throw Error(ErrorKind::DivisionByZero, "f_pair with equal parameters");
  GroupAlgebraElement<Scalar> r = GroupAlgebraElement<Scalar>::one(l);
  r -= transposition_element<Scalar>(l, i, j, Scalar(1) / d);
  return r;
}

/// Parameters along the line x_k = c_k + col_k * eps used to fuse a tableau.
struct FusionAssignment {
  std::vector<int> contents;
  std::vector<int> columns;
};

FusionAssignment fusion_assignment(const StandardTableau& t);

/// The ordered product over lexicographic pairs k < l of f_kl(x_k, x_l) along
/// the fusion line, as numerator / scalar denominator with polynomial
/// coefficients in eps.
struct FusedProduct {
  GroupAlgebraElement<Polynomial> numerator;
  Polynomial denominator;
};

FusedProduct fused_product(const FusionAssignment& a);

/// Value at eps = 0 of numerator/denominator; throws NotRegular if the
/// quotient has a pole there.
Rational regular_value_at_zero(const Polynomial& numerator, const Polynomial& denominator);

/// Matrix element f_Lambda of a straight standard tableau via fusion.
GroupAlgebraQ fuse_f_Lambda(const StandardTableau& lambda);
/// Element f_Omega of a (possibly skew) standard tableau via fusion with
/// its own contents and columns.
GroupAlgebraQ fuse_f_Omega(const StandardTableau& omega);

/// The unique element with identity coefficient 1 satisfying
/// X_k f = c_k f = f X_k for the Jucys-Murphy elements X_k = sum_{i<k} (i k).
GroupAlgebraQ jm_oracle_f_Lambda(const StandardTableau& lambda, int max_size = 6);

/// Extracts f_Omega from theta_m(f_Lambda) = f_Upsilon * iota_m(f_Omega) by
/// reading the coefficients of the elements (id, v).
GroupAlgebraQ extract_f_Omega(const GroupAlgebraQ& f_lambda, int m);

/// theta_m(f_Lambda) == f_Upsilon * iota_m(f_Omega) with f_Omega fused directly.
bool check_skew_factorization(const StandardTableau& lambda, int m);

/// f_01(x, c_1) ... f_0l(x, c_l) iota_1(f_Lambda) == (1 - sum_k (0 k)/x) iota_1(f_Lambda).
bool check_linear_pencil_identity(const StandardTableau& lambda);

/// f^2 == f * l!/dim U_lambda.
bool check_idempotent_scalar(const StandardTableau& lambda, const GroupAlgebraQ& f);

/// (s_k - h) f_Lambda == f_{s_k Lambda} (s_k + h), h = 1/(c_{k+1} - c_k);
/// returns true vacuously when s_k Lambda is not standard.
bool check_exchange_relation(const StandardTableau& lambda, int k);

/// Swaps the entries k and k+1; returns false if the result is not standard.
bool swap_entries(const StandardTableau& t, int k, StandardTableau& out);

}  // namespace yfuse
