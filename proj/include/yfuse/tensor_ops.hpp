#pragma once

// Structural application of the elementary tensor operators (factor
// permutations, contraction-insertions, gl_N generators) to dense matrices.
// Positions are 0-based digit positions of the row-major product basis
// (leftmost factor most significant); every helper is generic in the scalar.

#include <vector>

#include "yfuse/error.hpp"
#include "yfuse/group_algebra.hpp"
#include "yfuse/linalg.hpp"

namespace yfuse {

/// N^factors, throwing BoundExceeded above max_dim.
long tensor_dimension(int N, int factors, long max_dim = 4096);

/// Index images of the basis under the operator exchanging the digits p and q.
std::vector<long> swap_action(int N, int factors, int p, int q);
/// Index images under reversing the digits first, ..., first+count-1.
std::vector<long> block_reversal_action(int N, int factors, int first, int count);

/// The contraction-insertion on digits (p, q) is a sum over the classes of
/// the remaining digits of the rank-one operator (sum_D e)(sum_D e)^T, where
/// D runs over the indices with equal digits at p and q. Each inner vector is
/// one such D (in the order d = 0..N-1).
std::vector<std::vector<long>> contraction_classes(int N, int factors, int p, int q);

/// Sparse matrix of an operator given by its nonzero entries.
template <typename Scalar>
struct SparseEntries {
  long dim = 0;
  std::vector<long> rows, cols;
  std::vector<Scalar> values;
};

/// P * A where P e_c = e_{img[c]}.
template <typename Scalar>
Mat<Scalar> left_permute(const Mat<Scalar>& a, const std::vector<long>& img) {
  Mat<Scalar> out(a.rows(), a.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) out.row(img[static_cast<std::size_t>(r)]) = a.row(r);
  return out;
}

/// A * P where P e_c = e_{img[c]}.
template <typename Scalar>
Mat<Scalar> right_permute(const Mat<Scalar>& a, const std::vector<long>& img) {
  Mat<Scalar> out(a.rows(), a.cols());
  for (Eigen::Index c = 0; c < a.cols(); ++c) out.col(c) = a.col(img[static_cast<std::size_t>(c)]);
  return out;
}

/// Q * A for the contraction-insertion with the given classes.
template <typename Scalar>
Mat<Scalar> left_contract(const Mat<Scalar>& a, const std::vector<std::vector<long>>& classes) {
  Mat<Scalar> out = zeros<Scalar>(a.rows(), a.cols());
  for (const auto& d : classes) {
    Mat<Scalar> s = a.row(d.front());
    for (std::size_t i = 1; i < d.size(); ++i)
      for (Eigen::Index c = 0; c < a.cols(); ++c)
        if (!is_zero(a(d[i], c))) s(0, c) += a(d[i], c);
    for (long r : d) out.row(r) = s;
  }
  return out;
}

/// A * Q for the contraction-insertion with the given classes.
template <typename Scalar>
Mat<Scalar> right_contract(const Mat<Scalar>& a, const std::vector<std::vector<long>>& classes) {
  Mat<Scalar> out = zeros<Scalar>(a.rows(), a.cols());
  for (const auto& d : classes) {
    Mat<Scalar> s = a.col(d.front());
    for (std::size_t i = 1; i < d.size(); ++i)
      for (Eigen::Index r = 0; r < a.rows(); ++r)
        if (!is_zero(a(r, d[i]))) s(r, 0) += a(r, d[i]);
    for (long c : d) out.col(c) = s;
  }
  return out;
}

/// Dense matrix of the permutation operator with the given images.
template <typename Scalar>
Mat<Scalar> permutation_matrix(const std::vector<long>& img) {
  const auto n = static_cast<Eigen::Index>(img.size());
  Mat<Scalar> m = zeros<Scalar>(n, n);
  for (Eigen::Index c = 0; c < n; ++c) m(img[static_cast<std::size_t>(c)], c) = Scalar(1);
  return m;
}

/// Dense matrix of the contraction-insertion with the given classes.
template <typename Scalar>
Mat<Scalar> contraction_matrix(long dim, const std::vector<std::vector<long>>& classes) {
  Mat<Scalar> m = zeros<Scalar>(dim, dim);
  for (const auto& d : classes)
    for (long r : d)
      for (long c : d) m(r, c) = Scalar(1);
  return m;
}

/// S * A and A * S for a sparse S.
template <typename Scalar, typename S2>
Mat<Scalar> left_sparse(const SparseEntries<S2>& s, const Mat<Scalar>& a) {
  Mat<Scalar> out = zeros<Scalar>(s.dim, a.cols());
  for (std::size_t e = 0; e < s.values.size(); ++e)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      if (!is_zero(a(s.cols[e], c))) out(s.rows[e], c) += Scalar(s.values[e]) * a(s.cols[e], c);
  return out;
}

template <typename Scalar, typename S2>
Mat<Scalar> right_sparse(const Mat<Scalar>& a, const SparseEntries<S2>& s) {
  Mat<Scalar> out = zeros<Scalar>(a.rows(), s.dim);
  for (std::size_t e = 0; e < s.values.size(); ++e)
    for (Eigen::Index r = 0; r < a.rows(); ++r)
      if (!is_zero(a(r, s.rows[e]))) out(r, s.cols[e]) += a(r, s.rows[e]) * Scalar(s.values[e]);
  return out;
}

template <typename Scalar>
Mat<Scalar> to_dense(const SparseEntries<Scalar>& s) {
  Mat<Scalar> m = zeros<Scalar>(s.dim, s.dim);
  for (std::size_t e = 0; e < s.values.size(); ++e) m(s.rows[e], s.cols[e]) += s.values[e];
  return m;
}

/// Action of the matrix unit E_ab (0-based a, b) of gl_N on a tensor
/// product: E_ab on each factor flagged true (defining module) and -E_ba on
/// each factor flagged false (contragredient module).
SparseEntries<Rational> gl_generator(int N, const std::vector<bool>& is_vector_factor, int a, int b);

}  // namespace yfuse
