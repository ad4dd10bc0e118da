#include "yfuse/group_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace yfuse {

Permutation::Permutation(std::vector<int> images) : p_(std::move(images)) {
  std::vector<bool> seen(p_.size(), false);
  for (int v : p_) {
    if (v < 0 || v >= static_cast<int>(p_.size()) || seen[static_cast<std::size_t>(v)])
      throw Error(ErrorKind::InvalidInput, "not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw Error(ErrorKind::IndexOutOfRange, "transposition indices out of range");
  Permutation s = identity(n);
  std::swap(s.p_[static_cast<std::size_t>(i - 1)], s.p_[static_cast<std::size_t>(j - 1)]);
  return s;
}

Permutation Permutation::from_one_line(const std::vector<int>& one_based) {
  std::vector<int> v;
  v.reserve(one_based.size());
  for (int x : one_based) v.push_back(x - 1);
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < p_.size(); ++i)
    if (p_[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(p_.size());
  for (std::size_t i = 0; i < p_.size(); ++i) v[static_cast<std::size_t>(p_[i])] = static_cast<int>(i);
  Permutation r;
  r.p_ = std::move(v);
  return r;
}

Permutation operator*(const Permutation& s, const Permutation& t) {
  if (s.size() != t.size()) throw Error(ErrorKind::SizeMismatch, "composing permutations of different size");
  Permutation r;
  r.p_.resize(s.p_.size());
  for (std::size_t i = 0; i < s.p_.size(); ++i) r.p_[i] = s.p_[static_cast<std::size_t>(t.p_[i])];
  return r;
}

std::string Permutation::cycle_str() const {
  std::ostringstream os;
  std::vector<bool> seen(p_.size(), false);
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (seen[i] || p_[i] == static_cast<int>(i)) continue;
    os << "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      os << (first ? "" : " ") << j + 1;
      first = false;
      j = static_cast<std::size_t>(p_[j]);
    }
    os << ")";
  }
  const std::string s = os.str();
  return s.empty() ? "id" : s;
}

std::string Permutation::one_line_str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < p_.size(); ++i) os << (i ? " " : "") << p_[i] + 1;
  return os.str();
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<Permutation> out;
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  do {
    Permutation s;
    s.p_ = v;
    out.push_back(std::move(s));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<int> tensor_digits(long index, int N, int n) {
  std::vector<int> d(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    d[static_cast<std::size_t>(i)] = static_cast<int>(index % N);
    index /= N;
  }
  return d;
}

long tensor_index(const std::vector<int>& digits, int N) {
  long idx = 0;
  for (int d : digits) idx = idx * N + d;
  return idx;
}

std::vector<long> permutation_action(const Permutation& s, int N) {
  const int n = s.size();
  long dim = 1;
  for (int i = 0; i < n; ++i) dim *= N;
  std::vector<long> img(static_cast<std::size_t>(dim));
  std::vector<int> b(static_cast<std::size_t>(n));
  for (long col = 0; col < dim; ++col) {
    const auto a = tensor_digits(col, N, n);
    for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(s(i))] = a[static_cast<std::size_t>(i)];
    img[static_cast<std::size_t>(col)] = tensor_index(b, N);
  }
  return img;
}

Permutation iota(const Permutation& s, int m) {
  std::vector<int> v(static_cast<std::size_t>(s.size() + m));
  for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i)] = i;
  for (int i = 0; i < s.size(); ++i) v[static_cast<std::size_t>(m + i)] = m + s(i);
  return Permutation(std::move(v));
}

bool split(const Permutation& s, int m, Permutation& left, Permutation& right) {
  const int n = s.size() - m;
  std::vector<int> l(static_cast<std::size_t>(m)), r(static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i) {
    if (s(i) >= m) return false;
    l[static_cast<std::size_t>(i)] = s(i);
  }
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = s(m + i) - m;
  left = Permutation(std::move(l));
  right = Permutation(std::move(r));
  return true;
}

}  // namespace yfuse
