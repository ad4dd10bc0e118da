#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "yfuse/error.hpp"

namespace yfuse {

/// Weakly decreasing sequence of positive integers; trailing zeros are
/// dropped on construction.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return p_; }
  /// Part i (1-based); zero beyond the length.
  int operator[](int i) const { return i >= 1 && i <= length() ? p_[static_cast<std::size_t>(i - 1)] : 0; }
  int length() const { return static_cast<int>(p_.size()); }
  int size() const;
  bool empty() const { return p_.empty(); }
  /// True when every part of mu is at most the corresponding part here.
  bool contains(const Partition& mu) const;
  std::string str() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return a.p_ != b.p_; }
  friend bool operator<(const Partition& a, const Partition& b) { return a.p_ < b.p_; }

 private:
  std::vector<int> p_;
};

Partition conjugate(const Partition& p);
/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

/// Matrix-style cell: row i downward, column j rightward, both 1-based.
struct Cell {
  int i = 0;
  int j = 0;
  friend bool operator==(const Cell& a, const Cell& b) { return a.i == b.i && a.j == b.j; }
  friend bool operator<(const Cell& a, const Cell& b) { return a.i != b.i ? a.i < b.i : a.j < b.j; }
};

class SkewShape {
 public:
  SkewShape() = default;
  /// Throws ShapeInvalid unless inner is contained in outer.
  SkewShape(Partition outer, Partition inner = {});

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int size() const { return outer_.size() - inner_.size(); }
  bool is_straight() const { return inner_.empty(); }
  bool contains(const Cell& c) const;
  std::string str() const;

  friend bool operator==(const SkewShape& a, const SkewShape& b) {
    return a.outer_ == b.outer_ && a.inner_ == b.inner_;
  }

 private:
  Partition outer_;
  Partition inner_;
};

/// Cells of the skew diagram in lexicographic (i, j) order.
std::vector<Cell> skew_cells(const SkewShape& s);

class StandardTableau {
 public:
  StandardTableau() = default;
  /// positions[k-1] is the cell holding k; throws ShapeInvalid unless the
  /// filling is a standard bijection onto the cells of the shape.
  StandardTableau(SkewShape shape, std::vector<Cell> positions);

  const SkewShape& shape() const { return shape_; }
  int size() const { return static_cast<int>(pos_.size()); }
  /// Cell holding k (1-based).
  const Cell& cell(int k) const { return pos_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<Cell>& positions() const { return pos_; }
  /// Entry at a cell of the shape.
  int entry(const Cell& c) const;
  /// Column index j of the cell holding k.
  int column(int k) const { return cell(k).j; }

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
    return a.shape_ == b.shape_ && a.pos_ == b.pos_;
  }

 private:
  SkewShape shape_;
  std::vector<Cell> pos_;
};

/// Fills the cells by columns left to right, downwards in every column.
StandardTableau column_tableau(const SkewShape& s);
/// Fills the cells by rows top to bottom, left to right in every row.
StandardTableau row_tableau(const SkewShape& s);

/// Content c_k = j - i of the cell holding k, for k = 1..n.
std::vector<int> contents(const StandardTableau& t);

/// The sub-tableau holding 1..m (a tableau of a straight shape when t is).
StandardTableau restrict_to_first(const StandardTableau& t, int m);
/// The tableau holding m+1..n renumbered to 1..n-m, of shape outer/(shape of 1..m).
StandardTableau remainder_after(const StandardTableau& t, int m);
/// Joins a straight tableau of mu with a tableau of lambda/mu, shifting the latter by |mu|.
StandardTableau concatenate(const StandardTableau& upsilon, const StandardTableau& omega);

struct Bounds {
  int max_tableau_cells = 8;
  int max_ssyt_N = 4;
};

std::vector<StandardTableau> enumerate_standard_tableaux(const SkewShape& s, const Bounds& b = {});

struct DimOracles {
  long tableau_count = 0;
  long ssyt_count = 0;
  std::optional<long> weyl_dim;
};

/// Number of semistandard fillings of s with entries in 1..N (brute force).
long ssyt_count(const SkewShape& s, int N, const Bounds& b = {});
/// Hook-length count of standard tableaux of a straight shape.
long hook_length_count(const Partition& lambda);
/// Dimension of the rational GL_N module with highest weight
/// (lambda_1, ..., 0, ..., -ltilde_2, -ltilde_1); zero when the lengths exceed N.
long weyl_dimension(const Partition& lambda, const Partition& lambda_tilde, int N);
DimOracles dim_oracles(const SkewShape& s, int N, const Bounds& b = {});

/// lambda_i >= mu_i, lambda'_i - mu'_i <= N, and the same for the tilde pair.
bool nonvanishing_condition(const Partition& lambda, const Partition& lambda_tilde, const Partition& mu,
                            const Partition& mu_tilde, int N);

}  // namespace yfuse
