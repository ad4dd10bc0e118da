#pragma once

#include <map>
#include <string>
#include <vector>

#include "yfuse/error.hpp"
#include "yfuse/linalg.hpp"

namespace yfuse {

/// Bijection of {1..n}, stored 0-based in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  /// The transposition (i j), 1-based.
  static Permutation transposition(int n, int i, int j);
  /// From 1-based one-line notation, e.g. {2, 1, 3}.
  static Permutation from_one_line(const std::vector<int>& one_based);

  int size() const { return static_cast<int>(p_.size()); }
  /// Image of i (0-based).
  int operator()(int i) const { return p_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return p_; }
  bool is_identity() const;
  Permutation inverse() const;

  /// Composition (s*t)(i) = s(t(i)).
  friend Permutation operator*(const Permutation& s, const Permutation& t);
  friend bool operator==(const Permutation& a, const Permutation& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return a.p_ != b.p_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.p_ < b.p_; }

  /// Cycle notation with 1-based labels, e.g. "(1 2)(3 4)"; "id" for the identity.
  std::string cycle_str() const;
  /// One-line notation with 1-based labels, e.g. "2 1 3".
  std::string one_line_str() const;

  /// All permutations of {1..n} in lexicographic one-line order.
  static std::vector<Permutation> all(int n);

 private:
  std::vector<int> p_;
};

/// Finite linear combination of permutations of S_n with coefficients in a
/// field (or ring) Scalar.
template <typename Scalar>
class GroupAlgebraElement {
 public:
  using Terms = std::map<Permutation, Scalar>;

  explicit GroupAlgebraElement(int n = 0) : n_(n) {}
  GroupAlgebraElement(int n, const Permutation& s, const Scalar& c = Scalar(1)) : n_(n) {
    if (s.size() != n) throw Error(ErrorKind::SizeMismatch, "permutation size differs from group order");
    add(s, c);
  }
  static GroupAlgebraElement one(int n) { return GroupAlgebraElement(n, Permutation::identity(n)); }

  int n() const { return n_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Scalar coefficient(const Permutation& s) const {
    auto it = t_.find(s);
    return it == t_.end() ? Scalar(0) : it->second;
  }

  void add(const Permutation& s, const Scalar& c) {
    if (yfuse::is_zero(c)) return;
    auto [it, inserted] = t_.emplace(s, c);
    if (!inserted) {
      it->second += c;
      if (yfuse::is_zero(it->second)) t_.erase(it);
    }
  }

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o) {
    check(o);
    for (const auto& [s, c] : o.t_) add(s, c);
    return *this;
  }
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o) {
    check(o);
    for (const auto& [s, c] : o.t_) add(s, -c);
    return *this;
  }
  GroupAlgebraElement& operator*=(const Scalar& c) {
    if (yfuse::is_zero(c)) {
      t_.clear();
      return *this;
    }
    for (auto& [s, v] : t_) v *= c;
    return *this;
  }

  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  friend GroupAlgebraElement operator*(GroupAlgebraElement a, const Scalar& c) { return a *= c; }
  friend GroupAlgebraElement operator*(const Scalar& c, GroupAlgebraElement a) { return a *= c; }
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    a.check(b);
    GroupAlgebraElement r(a.n_);
    for (const auto& [s, c] : a.t_)
      for (const auto& [t, d] : b.t_) r.add(s * t, c * d);
    return r;
  }
  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.n_ == b.n_ && a.t_ == b.t_;
  }
  friend bool operator!=(const GroupAlgebraElement& a, const GroupAlgebraElement& b) { return !(a == b); }

 private:
  void check(const GroupAlgebraElement& o) const {
    if (o.n_ != n_) throw Error(ErrorKind::SizeMismatch, "group algebra elements of different order");
  }
  int n_;
  Terms t_;
};

using GroupAlgebraQ = GroupAlgebraElement<Rational>;

/// Coefficient-wise map to another scalar type.
template <typename To, typename From, typename F>
GroupAlgebraElement<To> map_coefficients(const GroupAlgebraElement<From>& a, F&& f) {
  GroupAlgebraElement<To> r(a.n());
  for (const auto& [s, c] : a.terms()) r.add(s, f(c));
  return r;
}

/// Index of the basis vector e_{a_1} x ... x e_{a_n} (leftmost most significant).
std::vector<int> tensor_digits(long index, int N, int n);
long tensor_index(const std::vector<int>& digits, int N);

/// Row image of the permutation operator P_s on (C^N)^{x n}: P_s e_a = e_b with b_{s(i)} = a_i.
std::vector<long> permutation_action(const Permutation& s, int N);

/// Matrix of sum_s c_s P_s on the n-fold tensor power of C^N.
template <typename Scalar>
Mat<Scalar> act_on_tensor(const GroupAlgebraElement<Scalar>& a, int N) {
  long dim = 1;
  for (int i = 0; i < a.n(); ++i) dim *= N;
  Mat<Scalar> m = zeros<Scalar>(dim, dim);
  for (const auto& [s, c] : a.terms()) {
    const auto img = permutation_action(s, N);
    for (long col = 0; col < dim; ++col) m(img[static_cast<std::size_t>(col)], col) += c;
  }
  return m;
}

/// Embedding S_n -> S_{m+n} acting on the last n letters.
Permutation iota(const Permutation& s, int m);
/// Product decomposition of a permutation of S_{m+n} preserving {1..m}:
/// returns false if it does not preserve the block.
bool split(const Permutation& s, int m, Permutation& left, Permutation& right);

template <typename Scalar>
GroupAlgebraElement<Scalar> iota(const GroupAlgebraElement<Scalar>& a, int m) {
  GroupAlgebraElement<Scalar> r(a.n() + m);
  for (const auto& [s, c] : a.terms()) r.add(iota(s, m), c);
  return r;
}

/// Keeps only the permutations lying in S_m x iota_m(S_n), zeroing the rest.
template <typename Scalar>
GroupAlgebraElement<Scalar> theta(const GroupAlgebraElement<Scalar>& a, int m) {
  GroupAlgebraElement<Scalar> r(a.n());
  Permutation l, rt;
  for (const auto& [s, c] : a.terms())
    if (split(s, m, l, rt)) r.add(s, c);
  return r;
}

template <typename Scalar>
GroupAlgebraElement<Scalar> transposition_element(int n, int i, int j, const Scalar& c = Scalar(1)) {
  return GroupAlgebraElement<Scalar>(n, Permutation::transposition(n, i, j), c);
}

}  // namespace yfuse
