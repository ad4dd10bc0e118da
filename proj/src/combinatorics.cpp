#include "yfuse/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "yfuse/rational.hpp"

namespace yfuse {

Partition::Partition(std::vector<int> parts) : p_(std::move(parts)) {
  while (!p_.empty() && p_.back() == 0) p_.pop_back();
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (p_[i] < 0) throw Error(ErrorKind::ShapeInvalid, "negative part in partition");
    if (i > 0 && p_[i] > p_[i - 1]) throw Error(ErrorKind::ShapeInvalid, "partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(p_.begin(), p_.end(), 0); }

bool Partition::contains(const Partition& mu) const {
  for (int i = 1; i <= mu.length(); ++i)
    if (mu[i] > (*this)[i]) return false;
  return true;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p_.size(); ++i) os << (i ? "," : "") << p_[i];
  os << ")";
  return os.str();
}

Partition conjugate(const Partition& p) {
  std::vector<int> c;
  for (int j = 1; j <= p[1]; ++j) {
    int h = 0;
    while (p[h + 1] >= j) ++h;
    c.push_back(h);
  }
  return Partition(std::move(c));
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_))
    throw Error(ErrorKind::ShapeInvalid, "inner partition " + inner_.str() + " not contained in " + outer_.str());
}

bool SkewShape::contains(const Cell& c) const {
  return c.i >= 1 && c.j >= 1 && c.j <= outer_[c.i] && c.j > inner_[c.i];
}

std::string SkewShape::str() const { return inner_.empty() ? outer_.str() : outer_.str() + "/" + inner_.str(); }

std::vector<Cell> skew_cells(const SkewShape& s) {
  std::vector<Cell> cells;
  for (int i = 1; i <= s.outer().length(); ++i)
    for (int j = s.inner()[i] + 1; j <= s.outer()[i]; ++j) cells.push_back({i, j});
  return cells;
}

StandardTableau::StandardTableau(SkewShape shape, std::vector<Cell> positions)
    : shape_(std::move(shape)), pos_(std::move(positions)) {
  auto cells = skew_cells(shape_);
  if (cells.size() != pos_.size()) throw Error(ErrorKind::ShapeInvalid, "filling size differs from shape size");
  auto sorted = pos_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != cells) throw Error(ErrorKind::ShapeInvalid, "filling is not a bijection onto the shape");
  for (int k = 1; k <= size(); ++k) {
    const Cell c = cell(k);
    const Cell right{c.i, c.j + 1}, down{c.i + 1, c.j};
    if (shape_.contains(right) && entry(right) < k) throw Error(ErrorKind::ShapeInvalid, "filling not increasing along rows");
    if (shape_.contains(down) && entry(down) < k) throw Error(ErrorKind::ShapeInvalid, "filling not increasing down columns");
  }
}

int StandardTableau::entry(const Cell& c) const {
  for (std::size_t k = 0; k < pos_.size(); ++k)
    if (pos_[k] == c) return static_cast<int>(k) + 1;
  throw Error(ErrorKind::IndexOutOfRange, "cell not in tableau");
}

StandardTableau column_tableau(const SkewShape& s) {
  auto cells = skew_cells(s);
  std::stable_sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    return a.j != b.j ? a.j < b.j : a.i < b.i;
  });
  return StandardTableau(s, std::move(cells));
}

StandardTableau row_tableau(const SkewShape& s) { return StandardTableau(s, skew_cells(s)); }

std::vector<int> contents(const StandardTableau& t) {
  std::vector<int> c;
  c.reserve(static_cast<std::size_t>(t.size()));
  for (const Cell& x : t.positions()) c.push_back(x.j - x.i);
  return c;
}

namespace {

// Row lengths of inner ∪ {cells holding 1..m}.
Partition filled_shape(const StandardTableau& t, int m) {
  const auto& inner = t.shape().inner();
  std::vector<int> rows(static_cast<std::size_t>(t.shape().outer().length()), 0);
  for (int i = 1; i <= static_cast<int>(rows.size()); ++i) rows[static_cast<std::size_t>(i - 1)] = inner[i];
  for (int k = 1; k <= m; ++k) ++rows[static_cast<std::size_t>(t.cell(k).i - 1)];
  return Partition(std::move(rows));
}

}  // namespace

StandardTableau restrict_to_first(const StandardTableau& t, int m) {
  if (m < 0 || m > t.size()) throw Error(ErrorKind::IndexOutOfRange, "restriction length out of range");
  std::vector<Cell> pos(t.positions().begin(), t.positions().begin() + m);
  return StandardTableau(SkewShape(filled_shape(t, m), t.shape().inner()), std::move(pos));
}

StandardTableau remainder_after(const StandardTableau& t, int m) {
  if (m < 0 || m > t.size()) throw Error(ErrorKind::IndexOutOfRange, "restriction length out of range");
  std::vector<Cell> pos(t.positions().begin() + m, t.positions().end());
  return StandardTableau(SkewShape(t.shape().outer(), filled_shape(t, m)), std::move(pos));
}

StandardTableau concatenate(const StandardTableau& upsilon, const StandardTableau& omega) {
  if (!upsilon.shape().is_straight() || upsilon.shape().outer() != omega.shape().inner())
    throw Error(ErrorKind::ShapeInvalid, "tableaux do not fit together");
  std::vector<Cell> pos = upsilon.positions();
  pos.insert(pos.end(), omega.positions().begin(), omega.positions().end());
  return StandardTableau(SkewShape(omega.shape().outer()), std::move(pos));
}

std::vector<StandardTableau> enumerate_standard_tableaux(const SkewShape& s, const Bounds& b) {
  const int n = s.size();
  if (n > b.max_tableau_cells)
    throw Error(ErrorKind::BoundExceeded, "tableau enumeration limited to " + std::to_string(b.max_tableau_cells) + " cells");
  const auto cells = skew_cells(s);
  std::map<Cell, bool> filled;
  for (const auto& c : cells) filled[c] = false;
  auto ready = [&](const Cell& c) {
    const Cell up{c.i - 1, c.j}, left{c.i, c.j - 1};
    return (!s.contains(up) || filled[up]) && (!s.contains(left) || filled[left]);
  };
  std::vector<StandardTableau> out;
  std::vector<Cell> pos;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(pos.size()) == n) {
      out.emplace_back(s, pos);
      return;
    }
    for (const auto& c : cells) {
      if (filled[c] || !ready(c)) continue;
      filled[c] = true;
      pos.push_back(c);
      rec();
      pos.pop_back();
      filled[c] = false;
    }
  };
  rec();
  return out;
}

long ssyt_count(const SkewShape& s, int N, const Bounds& b) {
  if (N < 1) throw Error(ErrorKind::InvalidInput, "N must be positive");
  if (N > b.max_ssyt_N) throw Error(ErrorKind::BoundExceeded, "semistandard enumeration limited to N <= " + std::to_string(b.max_ssyt_N));
  const auto cells = skew_cells(s);
  std::map<Cell, int> val;
  long count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == cells.size()) {
      ++count;
      return;
    }
    const Cell c = cells[idx];
    const Cell up{c.i - 1, c.j}, left{c.i, c.j - 1};
    int lo = 1;
    if (s.contains(left)) lo = std::max(lo, val[left]);
    if (s.contains(up)) lo = std::max(lo, val[up] + 1);
    for (int v = lo; v <= N; ++v) {
      val[c] = v;
      rec(idx + 1);
    }
    val.erase(c);
  };
  rec(0);
  return count;
}

long hook_length_count(const Partition& lambda) {
  const Partition lc = conjugate(lambda);
  mpz_class num = 1, den = 1;
  for (int k = 2; k <= lambda.size(); ++k) num *= k;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda[i]; ++j) den *= (lambda[i] - j) + (lc[j] - i) + 1;
  return mpz_class(num / den).get_si();
}

long weyl_dimension(const Partition& lambda, const Partition& lambda_tilde, int N) {
  if (lambda.length() + lambda_tilde.length() > N) return 0;
  std::vector<long> w(static_cast<std::size_t>(N), 0);
  for (int i = 1; i <= lambda.length(); ++i) w[static_cast<std::size_t>(i - 1)] = lambda[i];
  for (int j = 1; j <= lambda_tilde.length(); ++j) w[static_cast<std::size_t>(N - j)] = -lambda_tilde[j];
  Rational d(1);
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      d *= Rational(w[static_cast<std::size_t>(i)] - w[static_cast<std::size_t>(j)] + j - i, j - i);
  return d.num().get_si();
}

DimOracles dim_oracles(const SkewShape& s, int N, const Bounds& b) {
  DimOracles o;
  o.tableau_count = static_cast<long>(enumerate_standard_tableaux(s, b).size());
  o.ssyt_count = ssyt_count(s, N, b);
  if (s.is_straight()) o.weyl_dim = weyl_dimension(s.outer(), Partition{}, N);
  return o;
}

bool nonvanishing_condition(const Partition& lambda, const Partition& lambda_tilde, const Partition& mu,
                            const Partition& mu_tilde, int N) {
  auto ok = [N](const Partition& l, const Partition& m) {
    if (!l.contains(m)) return false;
    const Partition lc = conjugate(l), mc = conjugate(m);
    for (int i = 1; i <= lc.length(); ++i)
      if (lc[i] - mc[i] > N) return false;
    return true;
  };
  return ok(lambda, mu) && ok(lambda_tilde, mu_tilde);
}

}  // namespace yfuse
