#include "yfuse/fusion.hpp"

namespace yfuse {

FusionAssignment fusion_assignment(const StandardTableau& t) {
  FusionAssignment a;
  a.contents = contents(t);
  for (int k = 1; k <= t.size(); ++k) a.columns.push_back(t.column(k));
  return a;
}

FusedProduct fused_product(const FusionAssignment& a) {
  const int n = static_cast<int>(a.contents.size());
  FusedProduct p{GroupAlgebraElement<Polynomial>::one(n), Polynomial(1)};
  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l) {
      const auto ku = static_cast<std::size_t>(k - 1), lu = static_cast<std::size_t>(l - 1);
      // x_k - x_l = (c_k - c_l) + (col_k - col_l) eps
      const Polynomial d(std::vector<Rational>{a.contents[ku] - a.contents[lu], a.columns[ku] - a.columns[lu]});
      if (d.is_zero()) throw Error(ErrorKind::NotRegular, "identically vanishing fusion denominator");
      GroupAlgebraElement<Polynomial> factor(n, Permutation::identity(n), d);
      factor.add(Permutation::transposition(n, k, l), Polynomial(-1));
      p.numerator = p.numerator * factor;
      p.denominator = p.denominator * d;
    }
  return p;
}

Rational regular_value_at_zero(const Polynomial& numerator, const Polynomial& denominator) {
  int r = 0;
  while (denominator.coeff(r).is_zero()) ++r;
  for (int i = 0; i < r; ++i)
    if (!numerator.coeff(i).is_zero()) throw Error(ErrorKind::NotRegular, "pole at eps = 0");
  return numerator.coeff(r) / denominator.coeff(r);
}

namespace {

GroupAlgebraQ regular_value(const FusedProduct& p) {
  GroupAlgebraQ out(p.numerator.n());
  for (const auto& [s, c] : p.numerator.terms()) out.add(s, regular_value_at_zero(c, p.denominator));
  return out;
}

}  // namespace

GroupAlgebraQ fuse_f_Omega(const StandardTableau& omega) { return regular_value(fused_product(fusion_assignment(omega))); }

GroupAlgebraQ fuse_f_Lambda(const StandardTableau& lambda) {
  if (!lambda.shape().is_straight()) throw Error(ErrorKind::ShapeInvalid, "f_Lambda needs a straight shape");
  return fuse_f_Omega(lambda);
}

GroupAlgebraQ jm_oracle_f_Lambda(const StandardTableau& lambda, int max_size) {
  const int l = lambda.size();
  if (l > max_size) throw Error(ErrorKind::BoundExceeded, "regular representation limited to l <= " + std::to_string(max_size));
  const auto perms = Permutation::all(l);
  std::map<Permutation, Eigen::Index> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<Eigen::Index>(i);
  const auto c = contents(lambda);
  const auto dim = static_cast<Eigen::Index>(perms.size());
  LinearSystem<Rational> sys(dim);
  for (int k = 2; k <= l; ++k) {
    MatQ left = zeros<Rational>(dim, dim), right = zeros<Rational>(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
      const Permutation& s = perms[static_cast<std::size_t>(r)];
      left(r, r) -= c[static_cast<std::size_t>(k - 1)];
      right(r, r) -= c[static_cast<std::size_t>(k - 1)];
      for (int i = 1; i < k; ++i) {
        const Permutation t = Permutation::transposition(l, i, k);
        // (X_k f)(s) = sum_i f((i k) s),  (f X_k)(s) = sum_i f(s (i k))
        left(r, index[t * s]) += 1;
        right(r, index[s * t]) += 1;
      }
    }
    sys.add_rows(left);
    sys.add_rows(right);
  }
  const MatQ k = sys.solutions();
  if (k.cols() != 1) throw Error(ErrorKind::InvalidInput, "joint eigenspace is not one-dimensional");
  const Rational id = k(index[Permutation::identity(l)], 0);
  if (id.is_zero()) throw Error(ErrorKind::Singular, "identity coefficient vanishes");
  GroupAlgebraQ f(l);
  for (Eigen::Index r = 0; r < dim; ++r) f.add(perms[static_cast<std::size_t>(r)], k(r, 0) / id);
  return f;
}

GroupAlgebraQ extract_f_Omega(const GroupAlgebraQ& f_lambda, int m) {
  const int n = f_lambda.n() - m;
  GroupAlgebraQ out(n);
  Permutation left, right;
  for (const auto& [s, c] : f_lambda.terms())
    if (split(s, m, left, right) && left.is_identity()) out.add(right, c);
  return out;
}

bool check_skew_factorization(const StandardTableau& lambda, int m) {
  const auto f_lambda = fuse_f_Lambda(lambda);
  const auto f_upsilon = fuse_f_Lambda(restrict_to_first(lambda, m));
  const auto f_omega = fuse_f_Omega(remainder_after(lambda, m));
  GroupAlgebraQ embedded_upsilon(lambda.size());
  for (const auto& [s, c] : f_upsilon.terms()) {
    std::vector<int> v = s.images();
    for (int i = m; i < lambda.size(); ++i) v.push_back(i);
    embedded_upsilon.add(Permutation(std::move(v)), c);
  }
  return theta(f_lambda, m) == embedded_upsilon * iota(f_omega, m);
}

bool check_linear_pencil_identity(const StandardTableau& lambda) {
  const int l = lambda.size();
  const auto c = contents(lambda);
  using GF = GroupAlgebraElement<RationalFunction>;
  const GF f = iota(map_coefficients<RationalFunction>(fuse_f_Lambda(lambda), [](const Rational& r) {
                      return RationalFunction(r);
                    }),
                    1);
  const RationalFunction x = RationalFunction::x();
  // Letter 0 is position 1 of S_{l+1}; letter k is position k+1.
  GF lhs = GF::one(l + 1);
  for (int k = 1; k <= l; ++k) lhs = lhs * f_pair<RationalFunction>(l + 1, 1, k + 1, x, RationalFunction(Rational(c[static_cast<std::size_t>(k - 1)])));
  lhs = lhs * f;
  GF rhs = GF::one(l + 1);
  for (int k = 1; k <= l; ++k) rhs -= transposition_element<RationalFunction>(l + 1, 1, k + 1, inverse(x));
  rhs = rhs * f;
  return lhs == rhs;
}

bool check_idempotent_scalar(const StandardTableau& lambda, const GroupAlgebraQ& f) {
  long fact = 1;
  for (int k = 2; k <= lambda.size(); ++k) fact *= k;
  const long dim = hook_length_count(lambda.shape().outer());
  return f * f == f * Rational(fact, dim);
}

bool swap_entries(const StandardTableau& t, int k, StandardTableau& out) {
  auto pos = t.positions();
  std::swap(pos[static_cast<std::size_t>(k - 1)], pos[static_cast<std::size_t>(k)]);
  try {
    out = StandardTableau(t.shape(), std::move(pos));
    return true;
  } catch (const Error&) {
    return false;
  }
}

bool check_exchange_relation(const StandardTableau& lambda, int k) {
  StandardTableau swapped;
  if (!swap_entries(lambda, k, swapped)) return true;
  const int l = lambda.size();
  const auto c = contents(lambda);
  const Rational h = inverse(Rational(c[static_cast<std::size_t>(k)] - c[static_cast<std::size_t>(k - 1)]));
  const auto sk = transposition_element<Rational>(l, k, k + 1);
  const auto one = GroupAlgebraQ::one(l);
  return (sk - one * h) * fuse_f_Lambda(lambda) == fuse_f_Lambda(swapped) * (sk + one * h);
}

}  // namespace yfuse
