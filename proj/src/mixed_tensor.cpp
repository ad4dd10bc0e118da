#include "yfuse/mixed_tensor.hpp"

#include <algorithm>
#include <string>

#include "yfuse/fusion.hpp"

namespace yfuse {

MixedTensorSpace::MixedTensorSpace(int N, int n, int n_dual) : N_(N), n_(n), n_dual_(n_dual) {
  if (n < 0 || n_dual < 0) throw Error(ErrorKind::InvalidInput, "negative factor count");
  dim_ = tensor_dimension(N, n + n_dual, kMaxDimension);
}

int MixedTensorSpace::dual_position(int l) const {
  if (l < 1 || l > n_dual_) throw Error(ErrorKind::IndexOutOfRange, "dual factor " + std::to_string(l));
  return l - 1;
}

int MixedTensorSpace::vector_position(int k) const {
  if (k < 1 || k > n_) throw Error(ErrorKind::IndexOutOfRange, "vector factor " + std::to_string(k));
  return n_dual_ + k - 1;
}

bool MixedTensorSpace::is_dual_label(int label) const {
  if (label < 1 || label > factors()) throw Error(ErrorKind::IndexOutOfRange, "factor label " + std::to_string(label));
  return label <= n_dual_;
}

std::vector<bool> MixedTensorSpace::vector_flags() const {
  std::vector<bool> v(static_cast<std::size_t>(factors()), true);
  for (int i = 0; i < n_dual_; ++i) v[static_cast<std::size_t>(i)] = false;
  return v;
}

MatQ w0(int N) {
  MatQ w = zeros<Rational>(static_cast<Eigen::Index>(N) * N, 1);
  for (int a = 0; a < N; ++a) w(a * N + a, 0) = Rational(1);
  return w;
}

TensorOperator perm_op(const MixedTensorSpace& space, int k, int l) {
  if (space.is_dual_label(k) != space.is_dual_label(l))
    throw Error(ErrorKind::MixedFactorKinds, "cannot exchange a dual factor with a vector factor");
  return {space, permutation_matrix<Rational>(swap_action(space.N(), space.factors(), k - 1, l - 1)),
          "exchange of factors " + std::to_string(k) + " and " + std::to_string(l)};
}

std::pair<TensorOperator, TensorOperator> reversal_ops(const MixedTensorSpace& space) {
  const int f = space.factors();
  return {{space, permutation_matrix<Rational>(block_reversal_action(space.N(), f, 0, space.n_dual())),
           "reversal of the dual factors"},
          {space, permutation_matrix<Rational>(block_reversal_action(space.N(), f, 0, f)), "reversal of all factors"}};
}

TensorOperator contraction_insertion(const MixedTensorSpace& space, int l, int k) {
  const auto classes = contraction_classes(space.N(), space.factors(), space.dual_position(l), space.vector_position(k));
  return {space, contraction_matrix<Rational>(space.dim(), classes),
          "contraction-insertion on dual " + std::to_string(l) + " and vector " + std::to_string(k)};
}

TensorOperator F_Omega_op(const StandardTableau& omega, int N) {
  const int n = omega.size();
  const MixedTensorSpace space(N, n, 0);
  const auto a = fusion_assignment(omega);
  Mat<Polynomial> num = identity<Polynomial>(space.dim());
  Polynomial den(1);
  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l) {
      const auto ku = static_cast<std::size_t>(k - 1), lu = static_cast<std::size_t>(l - 1);
      const Polynomial d(std::vector<Rational>{a.contents[ku] - a.contents[lu], a.columns[ku] - a.columns[lu]});
      if (d.is_zero()) throw Error(ErrorKind::NotRegular, "identically vanishing fusion denominator");
      // num <- num * (d - P_kl)
      Mat<Polynomial> next = right_permute(num, swap_action(N, n, k - 1, l - 1));
      for (Eigen::Index j = 0; j < num.cols(); ++j)
        for (Eigen::Index i = 0; i < num.rows(); ++i) next(i, j) = num(i, j) * d - next(i, j);
      num = std::move(next);
      den = den * d;
    }
  MatQ m(space.dim(), space.dim());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, j) = regular_value_at_zero(num(i, j), den);
  return {space, std::move(m), "fused product of Yang R-matrices"};
}

std::vector<ContractionFactor> G_factors(const StandardTableau& omega, const StandardTableau& omega_tilde, int N,
                                         int M) {
  const int n = omega.size(), nt = omega_tilde.size();
  const auto c = contents(omega), ct = contents(omega_tilde);
  std::vector<ContractionFactor> out;
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= nt; ++l) {
      const int den = c[static_cast<std::size_t>(k - 1)] + ct[static_cast<std::size_t>(l - 1)] + N + M;
      if (den == 0)
        throw Error(ErrorKind::DenominatorZero,
                    "contraction factor (k=" + std::to_string(k) + ", l=" + std::to_string(l) + ") has zero denominator");
      out.push_back({nt - l + 1, k, Rational(1, den)});
    }
  return out;
}

namespace {

std::vector<std::vector<long>> classes_for(const MixedTensorSpace& space, const ContractionFactor& f) {
  return contraction_classes(space.N(), space.factors(), space.dual_position(f.dual), space.vector_position(f.vector));
}

MatQ minus_scaled(const MatQ& a, const MatQ& b, const Rational& c) {
  MatQ out = a;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!b(i, j).is_zero()) out(i, j) -= c * b(i, j);
  return out;
}

}  // namespace

MatQ apply_factors_left(const MixedTensorSpace& space, const std::vector<ContractionFactor>& factors, const MatQ& a) {
  MatQ out = a;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    out = minus_scaled(out, left_contract(out, classes_for(space, *it)), it->coefficient);
  return out;
}

MatQ apply_factors_right(const MixedTensorSpace& space, const MatQ& a, const std::vector<ContractionFactor>& factors) {
  MatQ out = a;
  for (const auto& f : factors) out = minus_scaled(out, right_contract(out, classes_for(space, f)), f.coefficient);
  return out;
}

std::pair<TensorOperator, TensorOperator> G_ops(const StandardTableau& omega, const StandardTableau& omega_tilde,
                                                int N, int M) {
  const MixedTensorSpace space(N, omega.size(), omega_tilde.size());
  auto factors = G_factors(omega, omega_tilde, N, M);
  const MatQ id = identity<Rational>(space.dim());
  MatQ g = apply_factors_right(space, id, factors);
  std::reverse(factors.begin(), factors.end());
  MatQ gp = apply_factors_right(space, id, factors);
  return {{space, std::move(g), "ordered contraction product"},
          {space, std::move(gp), "reverse-ordered contraction product"}};
}

TensorOperator reflected_tensor_op(const StandardTableau& omega, const StandardTableau& omega_tilde, int N) {
  const MixedTensorSpace space(N, omega.size(), omega_tilde.size());
  const int nt = omega_tilde.size();
  const MatQ ft = F_Omega_op(omega_tilde, N).matrix;
  const auto rev = block_reversal_action(N, nt, 0, nt);
  const MatQ conj = left_permute(right_permute(ft, rev), rev);
  return {space, kron(conj, F_Omega_op(omega, N).matrix), "reflected dual symmetrizer tensor symmetrizer"};
}

TensorOperator F_OmOmt_op(const StandardTableau& omega, const StandardTableau& omega_tilde, int N, int M) {
  const auto factors = G_factors(omega, omega_tilde, N, M);
  TensorOperator x = reflected_tensor_op(omega, omega_tilde, N);
  return {x.space, apply_factors_left(x.space, factors, x.matrix), "mixed tensor symmetrizer"};
}

bool check_G_exchange(const StandardTableau& omega, const StandardTableau& omega_tilde, int N, int M) {
  auto factors = G_factors(omega, omega_tilde, N, M);
  const TensorOperator x = reflected_tensor_op(omega, omega_tilde, N);
  const MatQ left = apply_factors_left(x.space, factors, x.matrix);
  std::reverse(factors.begin(), factors.end());
  const MatQ right = apply_factors_right(x.space, x.matrix, factors);
  return equal(left, right);
}

MatQ contraction_map(const MixedTensorSpace& space, int l, int k) {
  const auto classes = contraction_classes(space.N(), space.factors(), space.dual_position(l), space.vector_position(k));
  MatQ m = zeros<Rational>(static_cast<Eigen::Index>(classes.size()), space.dim());
  for (std::size_t r = 0; r < classes.size(); ++r)
    for (long c : classes[r]) m(static_cast<Eigen::Index>(r), c) = Rational(1);
  return m;
}

namespace {

MatQ stacked_contractions(const MixedTensorSpace& space) {
  std::vector<MatQ> blocks;
  Eigen::Index rows = 0;
  for (int l = 1; l <= space.n_dual(); ++l)
    for (int k = 1; k <= space.n(); ++k) {
      blocks.push_back(contraction_map(space, l, k));
      rows += blocks.back().rows();
    }
  MatQ m(rows, space.dim());
  Eigen::Index r = 0;
  for (const auto& b : blocks) {
    m.middleRows(r, b.rows()) = b;
    r += b.rows();
  }
  return m;
}

}  // namespace

MatQ traceless_subspace(const MixedTensorSpace& space) {
  if (space.n() == 0 || space.n_dual() == 0) return identity<Rational>(space.dim());
  return kernel(stacked_contractions(space));
}

bool commutes_with_gl(const MixedTensorSpace& space, const MatQ& op) {
  if (op.rows() != space.dim() || op.cols() != space.dim())
    throw Error(ErrorKind::SizeMismatch, "operator does not act on the mixed tensor space");
  const auto flags = space.vector_flags();
  for (int a = 0; a < space.N(); ++a)
    for (int b = 0; b < space.N(); ++b) {
      const auto e = gl_generator(space.N(), flags, a, b);
      if (!equal(left_sparse(e, op), right_sparse(op, e))) return false;
    }
  return true;
}

bool same_column_space(const MatQ& a, const MatQ& b) {
  if (a.rows() != b.rows()) return false;
  const auto ra = rank(a);
  if (rank(b) != ra) return false;
  MatQ ab(a.rows(), a.cols() + b.cols());
  ab.leftCols(a.cols()) = a;
  ab.rightCols(b.cols()) = b;
  return rank(ab) == ra;
}

SymmetrizerReport verify_symmetrizer_identities(const StandardTableau& lambda, const StandardTableau& lambda_tilde,
                                                int N) {
  if (!lambda.shape().is_straight() || !lambda_tilde.shape().is_straight())
    throw Error(ErrorKind::ShapeInvalid, "symmetrizer identities need straight shapes");
  SymmetrizerReport rep;
  const int l = lambda.size(), lt = lambda_tilde.size();
  const TensorOperator x = reflected_tensor_op(lambda, lambda_tilde, N);
  const MixedTensorSpace& space = x.space;
  const MatQ f = F_OmOmt_op(lambda, lambda_tilde, N, 0).matrix;

  // Dual index outer, vector index inner; with the base dimension as the shift.
  const auto c = contents(lambda), ct = contents(lambda_tilde);
  std::vector<ContractionFactor> factors;
  for (int i = 1; i <= lt; ++i)
    for (int k = 1; k <= l; ++k) {
      const int den = c[static_cast<std::size_t>(k - 1)] + ct[static_cast<std::size_t>(i - 1)] + N;
      if (den == 0) throw Error(ErrorKind::DenominatorZero, "contraction factor has zero denominator");
      factors.push_back({lt - i + 1, k, Rational(1, den)});
    }
  const MatQ left_form = apply_factors_left(space, factors, x.matrix);
  std::reverse(factors.begin(), factors.end());
  const MatQ right_form = apply_factors_right(space, x.matrix, factors);
  rep.orderings_agree = equal(left_form, f) && equal(right_form, f);

  rep.transpose_invariant = equal<Rational>(f.transpose(), f);

  rep.image_traceless = true;
  for (int i = 1; i <= lt; ++i)
    for (int k = 1; k <= l; ++k)
      if (!is_zero_matrix(left_contract(f, contraction_classes(N, space.factors(), space.dual_position(i),
                                                               space.vector_position(k)))))
        rep.image_traceless = false;

  MatQ inter = column_basis(x.matrix).basis;
  if (lt > 0 && l > 0 && inter.cols() > 0) inter = mul(inter, kernel(mul(stacked_contractions(space), inter)));
  rep.image_intersection = same_column_space(f, inter);

  long fact = 1, fact_t = 1;
  for (int k = 2; k <= l; ++k) fact *= k;
  for (int k = 2; k <= lt; ++k) fact_t *= k;
  const Rational scalar = Rational(fact, hook_length_count(lambda.shape().outer())) *
                          Rational(fact_t, hook_length_count(lambda_tilde.shape().outer()));
  rep.square_scalar = equal(mul(f, f), scaled(f, scalar));

  rep.rank = static_cast<long>(rank(f));
  rep.weyl_dim = weyl_dimension(lambda.shape().outer(), lambda_tilde.shape().outer(), N);
  rep.rank_matches_weyl = rep.rank == rep.weyl_dim;
  rep.equivariant = commutes_with_gl(space, f);
  return rep;
}

namespace {

// Elementary R-matrices at numeric parameters; labels are overall factor labels.
MatQ yang_r(const MixedTensorSpace& s, int i, int j, const Rational& x, const Rational& y) {
  const MatQ p = perm_op(s, i, j).matrix;
  return identity<Rational>(s.dim()) - scaled(p, inverse(x - y));
}

MatQ contraction_r(const MixedTensorSpace& s, int i, int j, const Rational& den) {
  const MatQ q = contraction_insertion(s, i, j - s.n_dual()).matrix;
  return identity<Rational>(s.dim()) - scaled(q, inverse(den));
}

MatQ r_tilde(const MixedTensorSpace& s, int i, int j, const Rational& x, const Rational& y) {
  return contraction_r(s, i, j, x - y);
}

MatQ r_bar(const MixedTensorSpace& s, int i, int j, const Rational& x, const Rational& y) {
  return contraction_r(s, i, j, x + y + Rational(s.N()));
}

MatQ prod(const std::vector<MatQ>& ms) {
  MatQ r = ms.front();
  for (std::size_t i = 1; i < ms.size(); ++i) r = mul(r, ms[i]);
  return r;
}

}  // namespace

std::vector<IdentityResult> verify_rmatrix_identities(int N, int samples, std::uint64_t seed) {
  SampleSequence seq(seed);
  const Rational L(N);
  auto generic = [&L](const std::vector<Rational>& t) {
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = 0; b < t.size(); ++b) {
        if (a != b && t[a] == t[b]) return false;
        if ((t[a] + t[b]).is_zero() || (t[a] + t[b] + L).is_zero() || (t[a] + t[b] - L).is_zero()) return false;
      }
    return true;
  };
  std::vector<std::vector<Rational>> pts;
  for (int s = 0; s < samples; ++s) pts.push_back(seq.next_tuple(3, generic));

  std::vector<IdentityResult> out;
  auto record = [&](const std::string& name, bool ok) { out.push_back({name, N, samples, ok}); };

  {  // braid relation in the group algebra of S_3
    bool ok = true;
    for (const auto& p : pts) {
      const auto lhs = f_pair(3, 1, 2, p[0], p[1]) * f_pair(3, 1, 3, p[0], p[2]) * f_pair(3, 2, 3, p[1], p[2]);
      const auto rhs = f_pair(3, 2, 3, p[1], p[2]) * f_pair(3, 1, 3, p[0], p[2]) * f_pair(3, 1, 2, p[0], p[1]);
      ok = ok && lhs == rhs;
    }
    record("group braid relation", ok);
  }
  {  // unitarity in the group algebra of S_2
    bool ok = true;
    for (const auto& p : pts) {
      const Rational d = p[0] - p[1];
      ok = ok && f_pair(2, 1, 2, p[0], p[1]) * f_pair(2, 2, 1, p[1], p[0]) ==
                     GroupAlgebraQ::one(2) * (Rational(1) - inverse(d * d));
    }
    record("group unitarity", ok);
  }

  const MixedTensorSpace vec3(N, 3, 0), dual3(N, 0, 3), vec2(N, 2, 0), dual2(N, 0, 2);
  const MixedTensorSpace one_two(N, 2, 1), two_one(N, 1, 2), one_one(N, 1, 1);
  {
    bool ok = true;
    for (const auto* s : {&vec3, &dual3})
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
          for (int k = 1; k <= 3; ++k) {
            if (i == j || j == k || i == k) continue;
            for (const auto& p : pts) {
              const auto &x = p[0], &y = p[1], &z = p[2];
              ok = ok && equal(prod({yang_r(*s, i, j, x, y), yang_r(*s, i, k, x, z), yang_r(*s, j, k, y, z)}),
                               prod({yang_r(*s, j, k, y, z), yang_r(*s, i, k, x, z), yang_r(*s, i, j, x, y)}));
            }
          }
    record("Yang-Baxter relation", ok);
  }
  {
    bool ok = true;
    for (const auto* s : {&vec2, &dual2})
      for (const auto& [i, j] : {std::pair{1, 2}, std::pair{2, 1}})
        for (const auto& p : pts) {
          const Rational d = p[0] - p[1];
          ok = ok && equal(mul(yang_r(*s, i, j, p[0], p[1]), yang_r(*s, j, i, p[1], p[0])),
                           scaled(identity<Rational>(s->dim()), Rational(1) - inverse(d * d)));
        }
    record("R-matrix unitarity", ok);
  }
  {
    bool ok = true;
    for (const auto* s : {&one_one, &one_two, &two_one})
      for (int i = 1; i <= s->n_dual(); ++i)
        for (int j = s->n_dual() + 1; j <= s->factors(); ++j)
          for (const auto& p : pts)
            ok = ok && equal(mul(r_tilde(*s, i, j, -p[0], p[1]), r_bar(*s, i, j, p[0], p[1])),
                             identity<Rational>(s->dim()));
    record("contraction R-matrix inversion", ok);
  }
  {
    bool ok_tilde = true, ok_bar = true;
    for (const auto& [j, k] : {std::pair{2, 3}, std::pair{3, 2}})
      for (const auto& p : pts) {
        const auto &x = p[0], &y = p[1], &z = p[2];
        const auto& s = one_two;
        ok_tilde = ok_tilde && equal(prod({r_tilde(s, 1, k, x, z), r_tilde(s, 1, j, x, y), yang_r(s, j, k, y, z)}),
                                     prod({yang_r(s, j, k, y, z), r_tilde(s, 1, j, x, y), r_tilde(s, 1, k, x, z)}));
        ok_bar = ok_bar && equal(prod({r_bar(s, 1, j, x, y), r_bar(s, 1, k, x, z), yang_r(s, j, k, y, z)}),
                                 prod({yang_r(s, j, k, y, z), r_bar(s, 1, k, x, z), r_bar(s, 1, j, x, y)}));
      }
    record("mixed braid relation (difference spectral parameter)", ok_tilde);
    record("mixed braid relation (sum spectral parameter)", ok_bar);
  }
  {
    bool ok = true;
    for (const auto& [i, j] : {std::pair{1, 2}, std::pair{2, 1}})
      for (const auto& p : pts) {
        const auto &x = p[0], &y = p[1], &z = p[2];
        const auto& s = two_one;
        ok = ok && equal(prod({yang_r(s, j, i, y, x), r_bar(s, i, 3, x, z), r_bar(s, j, 3, y, z)}),
                         prod({r_bar(s, j, 3, y, z), r_bar(s, i, 3, x, z), yang_r(s, j, i, y, x)}));
      }
    record("dual-dual braid relation (sum spectral parameter)", ok);
  }
  {
    bool ok = true;
    for (const auto* s : {&vec2, &dual2})
      for (const auto& [i, j] : {std::pair{1, 2}, std::pair{2, 1}})
        for (const auto& p : pts) ok = ok && equal(yang_r(*s, i, j, -p[0], -p[1]), yang_r(*s, j, i, p[1], p[0]));
    record("R-matrix reflection", ok);
  }
  return out;
}

}  // namespace yfuse
