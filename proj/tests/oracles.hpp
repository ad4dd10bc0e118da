#pragma once

// Independent brute-force oracles used by the tests. They deliberately
// avoid the library's own enumeration code paths.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "yfuse/combinatorics.hpp"
#include "yfuse/linalg.hpp"

namespace oracle {

inline std::set<std::pair<int, int>> cell_set(const std::vector<int>& outer, const std::vector<int>& inner) {
  std::set<std::pair<int, int>> s;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    const int lo = i < inner.size() ? inner[i] : 0;
    for (int j = lo + 1; j <= outer[i]; ++j) s.insert({static_cast<int>(i) + 1, j});
  }
  return s;
}

/// Column heights by counting cells of the diagram column by column.
inline std::vector<int> conjugate_by_counting(const std::vector<int>& parts) {
  const auto cells = cell_set(parts, {});
  int maxj = 0;
  for (const auto& c : cells) maxj = std::max(maxj, c.second);
  std::vector<int> out(static_cast<std::size_t>(maxj), 0);
  for (const auto& c : cells) ++out[static_cast<std::size_t>(c.second - 1)];
  return out;
}

/// Standard fillings counted over all n! bijections.
inline long standard_count_bruteforce(const std::vector<int>& outer, const std::vector<int>& inner) {
  const auto cells_set = cell_set(outer, inner);
  std::vector<std::pair<int, int>> cells(cells_set.begin(), cells_set.end());
  std::vector<int> fill(cells.size());
  std::iota(fill.begin(), fill.end(), 1);
  long count = 0;
  do {
    bool ok = true;
    for (std::size_t a = 0; a < cells.size() && ok; ++a)
      for (std::size_t b = 0; b < cells.size() && ok; ++b) {
        const bool right = cells[b].first == cells[a].first && cells[b].second == cells[a].second + 1;
        const bool down = cells[b].second == cells[a].second && cells[b].first == cells[a].first + 1;
        if ((right || down) && fill[b] < fill[a]) ok = false;
      }
    if (ok) ++count;
  } while (std::next_permutation(fill.begin(), fill.end()));
  return count;
}

/// Semistandard fillings with entries <= N counted over all N^n fillings.
inline long ssyt_count_bruteforce(const std::vector<int>& outer, const std::vector<int>& inner, int N) {
  const auto cells_set = cell_set(outer, inner);
  std::vector<std::pair<int, int>> cells(cells_set.begin(), cells_set.end());
  const std::size_t n = cells.size();
  std::vector<int> fill(n, 1);
  long count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b) {
        const bool right = cells[b].first == cells[a].first && cells[b].second == cells[a].second + 1;
        const bool down = cells[b].second == cells[a].second && cells[b].first == cells[a].first + 1;
        if (right && fill[b] < fill[a]) ok = false;
        if (down && fill[b] <= fill[a]) ok = false;
      }
    if (ok) ++count;
    std::size_t k = 0;
    while (k < n && fill[k] == N) fill[k++] = 1;
    if (k == n) break;
    ++fill[k];
  }
  return count;
}

/// All partitions with size <= max_size (including the empty one).
inline std::vector<yfuse::Partition> partitions_up_to(int max_size) {
  std::vector<yfuse::Partition> out;
  for (int n = 0; n <= max_size; ++n)
    for (auto& p : yfuse::partitions_of(n)) out.push_back(p);
  return out;
}

/// Digits of a basis index of the N^f-dimensional product space (leftmost first).
inline std::vector<int> digits(long idx, int N, int f) {
  std::vector<int> d(static_cast<std::size_t>(f));
  for (int i = f - 1; i >= 0; --i) {
    d[static_cast<std::size_t>(i)] = static_cast<int>(idx % N);
    idx /= N;
  }
  return d;
}

inline long power(int N, int f) {
  long d = 1;
  for (int i = 0; i < f; ++i) d *= N;
  return d;
}

/// Entry-by-entry matrix of the exchange of 0-based factors p and q:
/// <e_r, P e_c> = 1 iff r is c with the digits at p and q swapped.
inline yfuse::MatQ swap_matrix(int N, int f, int p, int q) {
  const long dim = power(N, f);
  yfuse::MatQ m = yfuse::zeros<yfuse::Rational>(dim, dim);
  for (long r = 0; r < dim; ++r)
    for (long c = 0; c < dim; ++c) {
      auto dr = digits(r, N, f), dc = digits(c, N, f);
      std::swap(dc[static_cast<std::size_t>(p)], dc[static_cast<std::size_t>(q)]);
      if (dr == dc) m(r, c) = 1;
    }
  return m;
}

/// Entry-by-entry matrix of u (x) v -> <u, v> w_0 on the 0-based factors p, q:
/// <e_r, Q e_c> = [r_p = r_q][c_p = c_q][r and c agree elsewhere].
inline yfuse::MatQ contraction_matrix(int N, int f, int p, int q) {
  const long dim = power(N, f);
  yfuse::MatQ m = yfuse::zeros<yfuse::Rational>(dim, dim);
  for (long r = 0; r < dim; ++r)
    for (long c = 0; c < dim; ++c) {
      const auto dr = digits(r, N, f), dc = digits(c, N, f);
      const auto P = static_cast<std::size_t>(p), Q = static_cast<std::size_t>(q);
      if (dr[P] != dr[Q] || dc[P] != dc[Q]) continue;
      bool rest = true;
      for (std::size_t i = 0; i < dr.size(); ++i)
        if (i != P && i != Q && dr[i] != dc[i]) rest = false;
      if (rest) m(r, c) = 1;
    }
  return m;
}

/// Dimension of the irreducible rational GL_N-module with highest weight
/// (lambda_1, ..., -lambda~_1): after tensoring with det^{lambda~_1} it is the
/// polynomial module of shape zeta_i = lambda_i - lambda~_{N-i+1} + lambda~_1,
/// whose dimension is the number of semistandard tableaux with entries <= N.
inline long rational_dimension(const std::vector<int>& lambda, const std::vector<int>& lambda_tilde, int N) {
  if (static_cast<int>(lambda.size() + lambda_tilde.size()) > N) return 0;
  auto part = [](const std::vector<int>& v, int i) { return i >= 1 && i <= static_cast<int>(v.size()) ? v[static_cast<std::size_t>(i - 1)] : 0; };
  const int r = part(lambda_tilde, 1);
  std::vector<int> zeta;
  for (int i = 1; i <= N; ++i) {
    const int z = part(lambda, i) - part(lambda_tilde, N - i + 1) + r;
    if (z > 0) zeta.push_back(z);
  }
  return ssyt_count_bruteforce(zeta, {}, N);
}

}  // namespace oracle
