#pragma once

#include <Eigen/Core>
#include <utility>
#include <vector>

#include "yfuse/error.hpp"
#include "yfuse/rational.hpp"
#include "yfuse/rational_function.hpp"

namespace yfuse {

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using MatQ = Mat<Rational>;
using MatF = Mat<RationalFunction>;

template <typename Scalar>
Mat<Scalar> zeros(Eigen::Index rows, Eigen::Index cols) {
  Mat<Scalar> m(rows, cols);
  m.fill(Scalar(0));
  return m;
}

template <typename Scalar>
Mat<Scalar> identity(Eigen::Index n) {
  Mat<Scalar> m = zeros<Scalar>(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

template <typename Scalar>
bool is_zero_matrix(const Mat<Scalar>& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!is_zero(a(i, j))) return false;
  return true;
}

template <typename Scalar>
bool equal(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

/// Exact product that skips zero entries of the left factor; much faster
/// than a dense kernel for the sparse operators built in this library.
template <typename Scalar>
Mat<Scalar> mul(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::SizeMismatch, "matrix product dimensions");
  Mat<Scalar> c = zeros<Scalar>(a.rows(), b.cols());
  for (Eigen::Index k = 0; k < a.cols(); ++k) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      const Scalar& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b(k, j);
        if (!is_zero(bkj)) c(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

template <typename Scalar>
Mat<Scalar> scaled(Mat<Scalar> a, const Scalar& s) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!is_zero(a(i, j))) a(i, j) *= s;
  return a;
}

template <typename Scalar>
Mat<Scalar> kron(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  Mat<Scalar> c = zeros<Scalar>(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          if (!is_zero(b(k, l))) c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return c;
}

/// In-place reduced row echelon form; returns the pivot columns.
template <typename Scalar>
std::vector<Eigen::Index> rref_in_place(Mat<Scalar>& a) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index p = row;
    while (p < a.rows() && is_zero(a(p, col))) ++p;
    if (p == a.rows()) continue;
    if (p != row) a.row(p).swap(a.row(row));
    const Scalar inv = Scalar(1) / a(row, col);
    for (Eigen::Index j = col; j < a.cols(); ++j)
      if (!is_zero(a(row, j))) a(row, j) *= inv;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == row || is_zero(a(i, col))) continue;
      const Scalar f = a(i, col);
      for (Eigen::Index j = col; j < a.cols(); ++j)
        if (!is_zero(a(row, j))) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Scalar>
Eigen::Index rank(Mat<Scalar> a) {
  return static_cast<Eigen::Index>(rref_in_place(a).size());
}

/// Basis of the null space, one vector per column.
template <typename Scalar>
Mat<Scalar> kernel(Mat<Scalar> a) {
  const auto pivots = rref_in_place(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  const Eigen::Index nfree = a.cols() - static_cast<Eigen::Index>(pivots.size());
  Mat<Scalar> k = zeros<Scalar>(a.cols(), nfree);
  Eigen::Index f = 0;
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    if (is_pivot[static_cast<std::size_t>(c)]) continue;
    k(c, f) = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const Scalar& v = a(static_cast<Eigen::Index>(r), c);
      if (!is_zero(v)) k(pivots[r], f) = -v;
    }
    ++f;
  }
  return k;
}

template <typename Scalar>
Mat<Scalar> inverse(const Mat<Scalar>& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::SizeMismatch, "inverse of a non-square matrix");
  const Eigen::Index n = a.rows();
  Mat<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = identity<Scalar>(n);
  const auto pivots = rref_in_place(aug);
  if (static_cast<Eigen::Index>(pivots.size()) < n || (n > 0 && pivots[static_cast<std::size_t>(n - 1)] != n - 1))
    throw Error(ErrorKind::Singular, "matrix is singular");
  return aug.rightCols(n);
}

/// Linearly independent columns of a (the pivot columns), together with
/// the indices of the rows on which the selected columns are independent.
template <typename Scalar>
struct ColumnBasis {
  Mat<Scalar> basis;
  std::vector<Eigen::Index> columns;
  std::vector<Eigen::Index> pivot_rows;
};

template <typename Scalar>
ColumnBasis<Scalar> column_basis(const Mat<Scalar>& a) {
  ColumnBasis<Scalar> out;
  Mat<Scalar> r = a;
  out.columns = rref_in_place(r);
  out.basis = Mat<Scalar>(a.rows(), static_cast<Eigen::Index>(out.columns.size()));
  for (std::size_t j = 0; j < out.columns.size(); ++j) out.basis.col(static_cast<Eigen::Index>(j)) = a.col(out.columns[j]);
  Mat<Scalar> t = out.basis.transpose();
  out.pivot_rows = rref_in_place(t);
  return out;
}

/// Coordinates c with basis * c = v, for v in the column span; uses the
/// pivot rows of a ColumnBasis (the restricted square block is invertible).
template <typename Scalar>
Mat<Scalar> coordinates(const ColumnBasis<Scalar>& cb, const Mat<Scalar>& v) {
  const Eigen::Index d = cb.basis.cols();
  Mat<Scalar> bs(d, d), vs(d, v.cols());
  for (Eigen::Index i = 0; i < d; ++i) {
    bs.row(i) = cb.basis.row(cb.pivot_rows[static_cast<std::size_t>(i)]);
    vs.row(i) = v.row(cb.pivot_rows[static_cast<std::size_t>(i)]);
  }
  return mul(inverse(bs), vs);
}

/// Incrementally reduced homogeneous linear system in a fixed number of
/// unknowns; rows are kept in reduced echelon form.
template <typename Scalar>
class LinearSystem {
 public:
  explicit LinearSystem(Eigen::Index unknowns) : rows_(0, unknowns) {}

  void add_rows(const Mat<Scalar>& eqs) {
    if (eqs.rows() == 0) return;
    Mat<Scalar> all(rows_.rows() + eqs.rows(), rows_.cols());
    all.topRows(rows_.rows()) = rows_;
    all.bottomRows(eqs.rows()) = eqs;
    const auto pivots = rref_in_place(all);
    rows_ = all.topRows(static_cast<Eigen::Index>(pivots.size()));
  }

  Eigen::Index rank() const { return rows_.rows(); }
  Eigen::Index unknowns() const { return rows_.cols(); }
  Mat<Scalar> solutions() const { return kernel(rows_); }

 private:
  Mat<Scalar> rows_;
};

/// Equations X*A - B*X = 0 for X of size p x q (column-major unknowns).
template <typename Scalar>
Mat<Scalar> intertwiner_equations(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  const Eigen::Index q = a.rows(), p = b.rows();
  if (a.cols() != q || b.cols() != p) throw Error(ErrorKind::SizeMismatch, "intertwiner generators must be square");
  Mat<Scalar> eq = zeros<Scalar>(p * q, p * q);
  for (Eigen::Index r = 0; r < p; ++r)
    for (Eigen::Index c = 0; c < q; ++c) {
      const Eigen::Index e = r + c * p;
      for (Eigen::Index k = 0; k < q; ++k)
        if (!is_zero(a(k, c))) eq(e, r + k * p) += a(k, c);
      for (Eigen::Index k = 0; k < p; ++k)
        if (!is_zero(b(r, k))) eq(e, k + c * p) -= b(r, k);
    }
  return eq;
}

template <typename Scalar>
Mat<Scalar> unvec(const Mat<Scalar>& v, Eigen::Index p, Eigen::Index q) {
  Mat<Scalar> x(p, q);
  for (Eigen::Index c = 0; c < q; ++c)
    for (Eigen::Index r = 0; r < p; ++r) x(r, c) = v(r + c * p, 0);
  return x;
}

/// Basis of {X : X*A_i = B_i*X for all i}.
template <typename Scalar>
std::vector<Mat<Scalar>> solve_intertwiner(const std::vector<Mat<Scalar>>& gens_a,
                                           const std::vector<Mat<Scalar>>& gens_b) {
  if (gens_a.size() != gens_b.size()) throw Error(ErrorKind::SizeMismatch, "generator lists differ in length");
  if (gens_a.empty()) throw Error(ErrorKind::InvalidInput, "no generators");
  const Eigen::Index q = gens_a[0].rows(), p = gens_b[0].rows();
  LinearSystem<Scalar> sys(p * q);
  for (std::size_t i = 0; i < gens_a.size(); ++i) sys.add_rows(intertwiner_equations(gens_a[i], gens_b[i]));
  const Mat<Scalar> k = sys.solutions();
  std::vector<Mat<Scalar>> out;
  for (Eigen::Index j = 0; j < k.cols(); ++j) out.push_back(unvec<Scalar>(k.col(j), p, q));
  return out;
}

template <typename Scalar>
Eigen::Index commutant_dimension(const std::vector<Mat<Scalar>>& gens) {
  return static_cast<Eigen::Index>(solve_intertwiner(gens, gens).size());
}

}  // namespace yfuse
