#include "yfuse/yangian.hpp"

#include <algorithm>
#include <array>
#include <type_traits>
#include <string>

#include "yfuse/tensor_ops.hpp"

namespace yfuse {

namespace {

MatF lift(const MatQ& a) {
  MatF out(a.rows(), a.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i) out(i, j) = RationalFunction(a(i, j));
  return out;
}

MatQ evaluate(const MatF& a, const Rational& x) {
  MatQ out(a.rows(), a.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i) out(i, j) = a(i, j).eval(x);
  return out;
}

template <typename F>
MatF map_entries(const MatF& a, F&& f) {
  MatF out(a.rows(), a.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i) out(i, j) = f(a(i, j));
  return out;
}

std::vector<Rational> to_rationals(const std::vector<int>& v) {
  return std::vector<Rational>(v.begin(), v.end());
}

/// A matrix polynomial sum_d c[d] x^d over a scalar denominator, built by
/// right multiplication with the numerators of the R-matrix factors on the
/// space aux (x) W_{n, ntilde} (aux is digit 0).
class FactorProduct {
 public:
  FactorProduct(int N, int n, int n_dual) : N_(N), n_(n), n_dual_(n_dual), den_(1) {
    dim_ = tensor_dimension(N, 1 + n + n_dual, MixedTensorSpace::kMaxDimension);
    c_.push_back(identity<Rational>(dim_));
  }

  /// Times (x - z) - P_{0, digit}; the factor R(x, z) has denominator x - z.
  void times_vector_factor(int digit, const Rational& z) {
    const auto img = swap_action(N_, factors(), 0, digit);
    std::vector<MatQ> next(c_.size() + 1, zeros<Rational>(dim_, dim_));
    for (std::size_t d = 0; d < c_.size(); ++d) {
      next[d + 1] += c_[d];
      next[d] -= scaled(c_[d], z);
      next[d] -= right_permute(c_[d], img);
    }
    c_ = std::move(next);
    den_ = den_ * Polynomial::linear_root(z);
  }

  /// Times (x - y)((x - y) + Q_{0, digit}); the factor R*(x, y) has
  /// denominator (x - y - 1)(x - y + 1).
  void times_dual_factor(int digit, const Rational& y) {
    const auto classes = contraction_classes(N_, factors(), 0, digit);
    std::vector<MatQ> next(c_.size() + 1, zeros<Rational>(dim_, dim_));
    for (std::size_t d = 0; d < c_.size(); ++d) {
      next[d + 1] += c_[d];
      next[d] -= scaled(c_[d], y);
      next[d] += right_contract(c_[d], classes);
    }
    c_ = std::move(next);
    times_scalar_linear(y);
    den_ = den_ * Polynomial::linear_root(y + Rational(1)) * Polynomial::linear_root(y - Rational(1));
  }

  const std::vector<MatQ>& coefficients() const { return c_; }
  const Polynomial& denominator() const { return den_; }
  long dim() const { return dim_; }

  MatF to_matrix() const {
    MatF out(dim_, dim_);
    for (long j = 0; j < dim_; ++j)
      for (long i = 0; i < dim_; ++i) {
        std::vector<Rational> coeffs;
        for (const auto& m : c_) coeffs.push_back(m(i, j));
        out(i, j) = RationalFunction(Polynomial(coeffs), den_);
      }
    return out;
  }

 private:
  int factors() const { return 1 + n_ + n_dual_; }

  void times_scalar_linear(const Rational& y) {
    std::vector<MatQ> next(c_.size() + 1, zeros<Rational>(dim_, dim_));
    for (std::size_t d = 0; d < c_.size(); ++d) {
      next[d + 1] += c_[d];
      next[d] -= scaled(c_[d], y);
    }
    c_ = std::move(next);
  }

  int N_, n_, n_dual_;
  long dim_;
  std::vector<MatQ> c_;
  Polynomial den_;
};

FactorProduct rho_product(int N, const std::vector<Rational>& y, const std::vector<Rational>& z) {
  const int nd = static_cast<int>(y.size()), n = static_cast<int>(z.size());
  FactorProduct p(N, n, nd);
  for (int i = 1; i <= nd; ++i) p.times_dual_factor(i, y[static_cast<std::size_t>(nd - i)]);
  for (int j = 1; j <= n; ++j) p.times_vector_factor(nd + j, z[static_cast<std::size_t>(j - 1)]);
  return p;
}

FactorProduct sigma_product(int N, const std::vector<Rational>& y, const std::vector<Rational>& z) {
  const int nd = static_cast<int>(y.size()), n = static_cast<int>(z.size());
  FactorProduct p(N, n, nd);
  for (int j = n; j >= 1; --j) p.times_vector_factor(nd + j, z[static_cast<std::size_t>(j - 1)]);
  for (int i = nd; i >= 1; --i) p.times_dual_factor(i, y[static_cast<std::size_t>(nd - i)]);
  return p;
}

RepresentedSeries to_series(int N, const FactorProduct& p) {
  return RepresentedSeries{N, p.dim() / N, p.to_matrix()};
}

/// Num_rho (1 (x) F) == (1 (x) F) Num_sigma, coefficientwise and blockwise.
bool products_intertwine(int N, const std::vector<Rational>& y, const std::vector<Rational>& z, const MatQ& f) {
  const FactorProduct rho = rho_product(N, y, z);
  const FactorProduct sigma = sigma_product(N, y, z);
  if (rho.denominator() != sigma.denominator()) return false;
  const long D = rho.dim() / N;
  if (f.rows() != D || f.cols() != D) throw Error(ErrorKind::SizeMismatch, "operator does not act on the tensor space");
  const auto& cr = rho.coefficients();
  const auto& cs = sigma.coefficients();
  if (cr.size() != cs.size()) return false;
  for (std::size_t d = 0; d < cr.size(); ++d)
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        const MatQ lhs = mul<Rational>(cr[d].block(a * D, b * D, D, D), f);
        const MatQ rhs = mul<Rational>(f, cs[d].block(a * D, b * D, D, D));
        if (!equal(lhs, rhs)) return false;
      }
  return true;
}

StandardTableau empty_tableau() { return column_tableau(SkewShape(Partition{})); }

StandardTableau single_column(int n) { return column_tableau(SkewShape(Partition(std::vector<int>(n, 1)))); }

std::vector<Rational> vector_parameters(const StandardTableau& omega) { return to_rationals(contents(omega)); }

std::vector<Rational> dual_parameters(const StandardTableau& omega_tilde, int M) {
  std::vector<Rational> y;
  for (int c : contents(omega_tilde)) y.push_back(Rational(-c - M));
  return y;
}

/// f(x) -> f(-x - M).
RationalFunction reflect_about(const RationalFunction& f, int M) { return f.reflected().shifted(Rational(M)); }

}  // namespace

std::vector<MatQ> RepresentedSeries::generators(int K) const {
  std::vector<MatQ> out(static_cast<std::size_t>(K) * N * N, zeros<Rational>(D, D));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (long i = 0; i < D; ++i)
        for (long j = 0; j < D; ++j) {
          const RationalFunction& f = T(a * D + i, b * D + j);
          if (f.is_zero()) continue;
          const auto s = f.series_at_infinity(K + 1);
          for (int k = 1; k <= K; ++k)
            out[static_cast<std::size_t>(((k - 1) * N + a) * N + b)](i, j) = s[static_cast<std::size_t>(k)];
        }
  return out;
}

bool RepresentedSeries::has_identity_leading_term() const {
  for (Eigen::Index j = 0; j < T.cols(); ++j)
    for (Eigen::Index i = 0; i < T.rows(); ++i) {
      const RationalFunction& f = T(i, j);
      if (f.num().degree() > f.den().degree()) return false;
      if (f.limit_at_infinity() != Rational(i == j ? 1 : 0)) return false;
    }
  return true;
}

bool LieAlgebraRep::satisfies_commutation_relations() const {
  for (int a = 0; a < K; ++a)
    for (int b = 0; b < K; ++b)
      for (int c = 0; c < K; ++c)
        for (int d = 0; d < K; ++d) {
          const MatQ lhs = mul(gen(a, b), gen(c, d)) - mul(gen(c, d), gen(a, b));
          MatQ rhs = zeros<Rational>(D, D);
          if (b == c) rhs += gen(a, d);
          if (d == a) rhs -= gen(c, b);
          if (!equal(lhs, rhs)) return false;
        }
  return true;
}

SubspaceCoordinates::SubspaceCoordinates(const MatQ& spanning_columns) {
  const auto cb = column_basis(spanning_columns);
  basis_ = cb.basis;
  pivot_rows_ = cb.pivot_rows;
  const Eigen::Index d = basis_.cols();
  MatQ block(d, d);
  for (Eigen::Index i = 0; i < d; ++i) block.row(i) = basis_.row(pivot_rows_[static_cast<std::size_t>(i)]);
  pivot_inverse_ = inverse(block);
}

MatQ SubspaceCoordinates::coordinates(const MatQ& v) const {
  const Eigen::Index d = basis_.cols();
  MatQ vs(d, v.cols());
  for (Eigen::Index i = 0; i < d; ++i) vs.row(i) = v.row(pivot_rows_[static_cast<std::size_t>(i)]);
  return mul(pivot_inverse_, vs);
}

MatF SubspaceCoordinates::coordinates(const MatF& v) const {
  const Eigen::Index d = basis_.cols();
  MatF vs(d, v.cols());
  for (Eigen::Index i = 0; i < d; ++i) vs.row(i) = v.row(pivot_rows_[static_cast<std::size_t>(i)]);
  return mul(lift(pivot_inverse_), vs);
}

RepresentedSeries rho_mixed(int N, const std::vector<Rational>& y, const std::vector<Rational>& z) {
  return to_series(N, rho_product(N, y, z));
}

RepresentedSeries sigma_mixed(int N, const std::vector<Rational>& y, const std::vector<Rational>& z) {
  return to_series(N, sigma_product(N, y, z));
}

RepresentedSeries pi_N_action(int N, int n, int n_dual) {
  const int factors = 1 + n + n_dual;
  const long dim = tensor_dimension(N, factors, MixedTensorSpace::kMaxDimension);
  MatQ a = zeros<Rational>(dim, dim);
  for (int i = 1; i <= n_dual; ++i) a += contraction_matrix<Rational>(dim, contraction_classes(N, factors, 0, i));
  for (int j = 1; j <= n; ++j) a -= permutation_matrix<Rational>(swap_action(N, factors, 0, n_dual + j));
  const RationalFunction inv_x = RationalFunction::inv_linear(Rational(0));
  MatF t = identity<RationalFunction>(dim);
  for (long c = 0; c < dim; ++c)
    for (long r = 0; r < dim; ++r)
      if (!a(r, c).is_zero()) t(r, c) += RationalFunction(a(r, c)) * inv_x;
  return RepresentedSeries{N, dim / N, t};
}

bool check_RTT(const RepresentedSeries& t, int samples, std::uint64_t seed) {
  SampleSequence seq(seed);
  const int N = t.N;
  const long D = t.D;
  int done = 0;
  while (done < samples) {
    const auto xy = seq.next_tuple(2, [](const std::vector<Rational>& v) { return v[0] != v[1]; });
    MatQ tx, ty;
    try {
      tx = evaluate(t.T, xy[0]);
      ty = evaluate(t.T, xy[1]);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::PoleAt) continue;
      throw;
    }
    const Rational diff = xy[0] - xy[1];
    auto bx = [&](int a, int b) { return MatQ(tx.block(a * D, b * D, D, D)); };
    auto by = [&](int a, int b) { return MatQ(ty.block(a * D, b * D, D, D)); };
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        for (int c = 0; c < N; ++c)
          for (int d = 0; d < N; ++d) {
            const MatQ lhs = scaled<Rational>(mul(bx(a, b), by(c, d)) - mul(by(c, d), bx(a, b)), diff);
            const MatQ rhs = mul(bx(c, b), by(a, d)) - mul(by(c, b), bx(a, d));
            if (!equal(lhs, rhs)) return false;
          }
    ++done;
  }
  return true;
}

RepresentedSeries twist(const RepresentedSeries& t, const RationalFunction& g) {
  if (g.num().degree() != g.den().degree() || g.limit_at_infinity() != Rational(1))
    throw Error(ErrorKind::InvalidInput, "twisting series must tend to 1 at infinity");
  return RepresentedSeries{t.N, t.D, map_entries(t.T, [&](const RationalFunction& f) { return f * g; })};
}

RepresentedSeries shift(const RepresentedSeries& t, const Rational& z) {
  return RepresentedSeries{t.N, t.D, map_entries(t.T, [&](const RationalFunction& f) { return f.shifted(-z); })};
}

RepresentedSeries dual_module(const RepresentedSeries& t) {
  const MatF inv = inverse(t.T);
  MatF out(t.T.rows(), t.T.cols());
  for (int a = 0; a < t.N; ++a)
    for (int b = 0; b < t.N; ++b) out.block(a * t.D, b * t.D, t.D, t.D) = inv.block(a * t.D, b * t.D, t.D, t.D).transpose();
  return RepresentedSeries{t.N, t.D, out};
}

RepresentedSeries restrict_series(const RepresentedSeries& t, const SubspaceCoordinates& sub) {
  if (sub.basis().rows() != t.D) throw Error(ErrorKind::SizeMismatch, "subspace of a different space");
  const long d = sub.dim();
  const MatF basis = lift(sub.basis());
  MatF out(t.N * d, t.N * d);
  for (int a = 0; a < t.N; ++a)
    for (int b = 0; b < t.N; ++b) out.block(a * d, b * d, d, d) = sub.coordinates(MatF(mul(t.block(a, b), basis)));
  return RepresentedSeries{t.N, d, out};
}

RationalFunction g_mu(const Partition& mu) {
  RationalFunction g(1);
  for (int i = 1; i <= mu.length(); ++i) {
    const Polynomial num = Polynomial::linear_root(Rational(mu[i] - i)) * Polynomial::linear_root(Rational(1 - i));
    const Polynomial den = Polynomial::linear_root(Rational(mu[i] - i + 1)) * Polynomial::linear_root(Rational(-i));
    g *= RationalFunction(num, den);
  }
  return g;
}

RationalFunction g_from_contents(const StandardTableau& lambda) {
  RationalFunction g(1);
  for (int c : contents(lambda)) {
    const Polynomial root = Polynomial::linear_root(Rational(c));
    g *= RationalFunction(root * root,
                          Polynomial::linear_root(Rational(c + 1)) * Polynomial::linear_root(Rational(c - 1)));
  }
  return g;
}

bool check_fact(const StandardTableau& lambda) {
  if (!lambda.shape().is_straight()) throw Error(ErrorKind::InvalidInput, "straight shape required");
  return g_mu(lambda.shape().outer()) == g_from_contents(lambda);
}

LieAlgebraRep mixed_tensor_gl_rep(const MixedTensorSpace& space) {
  LieAlgebraRep rep{space.N(), space.dim(), {}};
  const auto flags = space.vector_flags();
  for (int a = 0; a < space.N(); ++a)
    for (int b = 0; b < space.N(); ++b) rep.E.push_back(to_dense(gl_generator(space.N(), flags, a, b)));
  return rep;
}

LieAlgebraRep restrict_rep(const LieAlgebraRep& rep, const SubspaceCoordinates& sub) {
  if (sub.basis().rows() != rep.D) throw Error(ErrorKind::SizeMismatch, "subspace of a different space");
  LieAlgebraRep out{rep.K, sub.dim(), {}};
  for (const auto& e : rep.E) out.E.push_back(sub.restrict(e));
  return out;
}

RepresentedSeries pi_NM_action(const LieAlgebraRep& rep, int N, int M) {
  const int L = N + M;
  if (N < 1 || M < 0 || rep.K != L) throw Error(ErrorKind::InvalidInput, "representation of gl_{N+M} required");
  const long D = rep.D;
  // x B(-x) = x + sum_ab E_ab (x) rho(E_ba).
  MatF xb(L * D, L * D);
  xb.fill(RationalFunction(0));
  for (int a = 0; a < L; ++a)
    for (int b = 0; b < L; ++b) {
      const MatQ& e = rep.gen(b, a);
      for (long j = 0; j < D; ++j)
        for (long i = 0; i < D; ++i)
          if (!e(i, j).is_zero()) xb(a * D + i, b * D + j) = RationalFunction(e(i, j));
    }
  for (long i = 0; i < L * D; ++i) xb(i, i) += RationalFunction::x();
  // C(x) = B(-x)^{-1} = x (x B(-x))^{-1}; keep the N x N auxiliary block.
  const MatF c = inverse(xb);
  MatF dblock = scaled<RationalFunction>(MatF(c.topLeftCorner(N * D, N * D)), RationalFunction::x());
  // T(x) = D(-x)^{-1}.
  const MatF t = inverse(map_entries(dblock, [](const RationalFunction& f) { return f.reflected(); }));
  return RepresentedSeries{N, D, t};
}

HomModule build_VmuMut_module(const Partition& lambda, const Partition& lambda_tilde, const Partition& mu,
                              const Partition& mu_tilde, int N, int M) {
  if (N < 1 || M < 0) throw Error(ErrorKind::InvalidInput, "N >= 1 and M >= 0 required");
  if (lambda.length() + lambda_tilde.length() > N + M)
    throw Error(ErrorKind::InvalidInput, "lambda'_1 + lambda~'_1 exceeds N + M");
  if (mu.length() + mu_tilde.length() > M) throw Error(ErrorKind::InvalidInput, "mu'_1 + mu~'_1 exceeds M");
  const int L = N + M;

  const MixedTensorSpace big(L, lambda.size(), lambda_tilde.size());
  const TensorOperator f = F_OmOmt_op(column_tableau(SkewShape(lambda)), column_tableau(SkewShape(lambda_tilde)), L, 0);
  const SubspaceCoordinates vl(f.matrix);
  const LieAlgebraRep rep_lambda = restrict_rep(mixed_tensor_gl_rep(big), vl);

  // Hom_{GL_M}(V_mu, V_lambda) as a space of dim_lambda x dim_mu matrices.
  std::vector<MatQ> hom;
  long dim_mu = 1;
  if (M == 0) {
    for (long i = 0; i < vl.dim(); ++i) {
      MatQ e = zeros<Rational>(vl.dim(), 1);
      e(i, 0) = Rational(1);
      hom.push_back(e);
    }
  } else {
    const MixedTensorSpace small(M, mu.size(), mu_tilde.size());
    const TensorOperator fm = F_OmOmt_op(column_tableau(SkewShape(mu)), column_tableau(SkewShape(mu_tilde)), M, 0);
    const SubspaceCoordinates vm(fm.matrix);
    const LieAlgebraRep rep_mu = restrict_rep(mixed_tensor_gl_rep(small), vm);
    dim_mu = vm.dim();
    std::vector<MatQ> ga, gb;
    for (int a = 0; a < M; ++a)
      for (int b = 0; b < M; ++b) {
        ga.push_back(rep_mu.gen(a, b));
        gb.push_back(rep_lambda.gen(N + a, N + b));
      }
    hom = solve_intertwiner(ga, gb);
  }
  if (hom.empty()) throw Error(ErrorKind::EmptyHom, "no GL_M-equivariant maps");

  const long h = static_cast<long>(hom.size());
  const long rows = vl.dim() * dim_mu;
  auto vec = [&](const auto& x) {
    using S = typename std::decay_t<decltype(x)>::Scalar;
    Mat<S> v(rows, 1);
    for (Eigen::Index c = 0; c < x.cols(); ++c)
      for (Eigen::Index r = 0; r < x.rows(); ++r) v(r + c * x.rows(), 0) = x(r, c);
    return v;
  };
  MatQ stacked(rows, h);
  for (long i = 0; i < h; ++i) stacked.col(i) = vec(hom[static_cast<std::size_t>(i)]);
  const SubspaceCoordinates hs(stacked);

  const RepresentedSeries t = pi_NM_action(rep_lambda, N, M);
  MatF out(N * h, N * h);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      const MatF tab = t.block(a, b);
      MatF images(rows, h);
      for (long i = 0; i < h; ++i) {
        const MatF xi = lift(hs.basis().col(i));
        MatF x(vl.dim(), dim_mu);
        for (long c = 0; c < dim_mu; ++c) x.col(c) = xi.block(c * vl.dim(), 0, vl.dim(), 1);
        images.col(i) = vec(MatF(mul(tab, x)));
      }
      out.block(a * h, b * h, h, h) = hs.coordinates(images);
    }

  const RationalFunction g =
      g_mu(mu) * reflect_about(g_mu(lambda_tilde), M) / reflect_about(g_mu(mu_tilde), M);
  return HomModule{twist(RepresentedSeries{N, h, out}, g), h, vl.dim(), dim_mu};
}

RepresentedSeries V_OmOmt_module(const StandardTableau& omega, const StandardTableau& omega_tilde, int N, int M) {
  const TensorOperator f = F_OmOmt_op(omega, omega_tilde, N, M);
  if (is_zero_matrix(f.matrix)) throw Error(ErrorKind::EmptyHom, "the symmetrizer vanishes");
  const RepresentedSeries rho = rho_mixed(N, dual_parameters(omega_tilde, M), vector_parameters(omega));
  return restrict_series(rho, SubspaceCoordinates(f.matrix));
}

bool check_intertwiner(const StandardTableau& omega, const StandardTableau& omega_tilde, int N, int M,
                       const std::vector<Rational>& y, const std::vector<Rational>& z) {
  if (static_cast<int>(y.size()) != omega_tilde.size() || static_cast<int>(z.size()) != omega.size())
    throw Error(ErrorKind::SizeMismatch, "one evaluation parameter per tensor factor");
  return products_intertwine(N, y, z, F_OmOmt_op(omega, omega_tilde, N, M).matrix);
}

bool verify_intertwiner_property(const StandardTableau& omega, const StandardTableau& omega_tilde, int N, int M) {
  return check_intertwiner(omega, omega_tilde, N, M, dual_parameters(omega_tilde, M), vector_parameters(omega));
}

EquivalenceCertificate certify_equivalence(const RepresentedSeries& a, const RepresentedSeries& b) {
  if (a.N != b.N) throw Error(ErrorKind::SizeMismatch, "modules over different Yangians");
  EquivalenceCertificate cert;
  cert.same_dimension = a.D == b.D;
  if (!cert.same_dimension) return cert;
  const long D = a.D;
  const int kmax = static_cast<int>(std::max<long>(2, 2 * D));
  const auto ga = a.generators(kmax);
  const auto gb = b.generators(kmax);
  const std::size_t per_k = static_cast<std::size_t>(a.N) * a.N;

  LinearSystem<Rational> between(D * D), self_a(D * D), self_b(D * D);
  auto dims = [&] {
    return std::array<long, 3>{D * D - between.rank(), D * D - self_a.rank(), D * D - self_b.rank()};
  };
  std::array<long, 3> prev{-1, -1, -1};
  int stable = 0;
  for (int k = 1; k <= kmax; ++k) {
    for (std::size_t i = (k - 1) * per_k; i < k * per_k; ++i) {
      between.add_rows(intertwiner_equations(ga[i], gb[i]));
      self_a.add_rows(intertwiner_equations(ga[i], ga[i]));
      self_b.add_rows(intertwiner_equations(gb[i], gb[i]));
    }
    const auto now = dims();
    stable = now == prev ? stable + 1 : 0;
    prev = now;
    cert.K = k;
    if (k >= 2 && stable >= 2) break;
  }
  cert.solution_dim = prev[0];
  cert.commutant_a = prev[1];
  cert.commutant_b = prev[2];
  if (cert.solution_dim == 1) {
    cert.witness = unvec<Rational>(MatQ(between.solutions().col(0)), D, D);
    cert.invertible = rank(cert.witness) == D;
  }
  return cert;
}

EquivalenceCertificate verify_module_equivalence(const Partition& lambda, const Partition& lambda_tilde,
                                                 const Partition& mu, const Partition& mu_tilde, int N, int M,
                                                 const StandardTableau& omega, const StandardTableau& omega_tilde) {
  if (!(omega.shape() == SkewShape(lambda, mu)) || !(omega_tilde.shape() == SkewShape(lambda_tilde, mu_tilde)))
    throw Error(ErrorKind::InvalidInput, "tableaux must have the shapes lambda/mu and lambda~/mu~");
  const HomModule hom = build_VmuMut_module(lambda, lambda_tilde, mu, mu_tilde, N, M);
  return certify_equivalence(hom.series, V_OmOmt_module(omega, omega_tilde, N, M));
}

ExteriorReport verify_exterior_powers(int N, int n, const Rational& z) {
  if (n < 1 || n > N) throw Error(ErrorKind::InvalidInput, "1 <= n <= N required");
  ExteriorReport rep;
  const MatQ an = F_Omega_op(single_column(n), N).matrix;
  std::vector<Rational> zs, ys(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) zs.push_back(z - Rational(k - 1));
  for (int k = 1; k <= n; ++k) ys[static_cast<std::size_t>(n - k)] = z - Rational(k - 1);  // y_{n-k+1}
  rep.commutes_vector = products_intertwine(N, {}, zs, an);
  rep.commutes_dual = products_intertwine(N, ys, {}, an);

  const SubspaceCoordinates image(an);
  const RepresentedSeries vn = restrict_series(rho_mixed(N, {}, zs), image);
  const RepresentedSeries vn_dual = restrict_series(rho_mixed(N, ys, {}), image);
  if (n == N) {
    const RationalFunction value(Polynomial::linear_root(z + Rational(1)), Polynomial::linear_root(z));
    MatF expected = zeros<RationalFunction>(N, N), expected_dual = zeros<RationalFunction>(N, N);
    for (int a = 0; a < N; ++a) {
      expected(a, a) = value;
      expected_dual(a, a) = inverse(value);
    }
    rep.top_value = equal(vn.T, expected);
    rep.top_dual_value = equal(vn_dual.T, expected_dual);
  }
  rep.dual_equivalence = certify_equivalence(dual_module(vn), vn_dual).pass();
  return rep;
}

PolynomialShape polynomial_shape(const Partition& lambda, const Partition& lambda_tilde, const Partition& mu,
                                 const Partition& mu_tilde, int N, int M) {
  const int L = N + M;
  if (lambda.length() + lambda_tilde.length() > L || mu.length() + mu_tilde.length() > M)
    throw Error(ErrorKind::InvalidInput, "column lengths exceed the rank");
  PolynomialShape s;
  s.r = lambda_tilde[1];
  std::vector<int> xi, eta;
  for (int i = 1; i <= L; ++i) xi.push_back(lambda[i] - lambda_tilde[L - i + 1] + s.r);
  for (int i = 1; i <= M; ++i) eta.push_back(mu[i] - mu_tilde[M - i + 1] + s.r);
  s.xi = Partition(xi);
  s.eta = Partition(eta);
  return s;
}

EquivalenceCertificate verify_polynomial_twist(const Partition& lambda, const Partition& lambda_tilde,
                                               const Partition& mu, const Partition& mu_tilde, int N, int M,
                                               const StandardTableau& omega, const StandardTableau& omega_tilde) {
  if (!(omega.shape() == SkewShape(lambda, mu)) || !(omega_tilde.shape() == SkewShape(lambda_tilde, mu_tilde)))
    throw Error(ErrorKind::InvalidInput, "tableaux must have the shapes lambda/mu and lambda~/mu~");
  const PolynomialShape ps = polynomial_shape(lambda, lambda_tilde, mu, mu_tilde, N, M);
  const StandardTableau gamma = column_tableau(SkewShape(ps.xi, ps.eta));
  const RepresentedSeries v_gamma = shift(V_OmOmt_module(gamma, empty_tableau(), N, 0), Rational(-ps.r));
  const RationalFunction g =
      reflect_about(g_mu(lambda_tilde), M) *
      RationalFunction(Polynomial::linear_root(Rational(-M - ps.r)), Polynomial::linear_root(Rational(-M)));
  return certify_equivalence(twist(v_gamma, g), V_OmOmt_module(omega, omega_tilde, N, M));
}

}  // namespace yfuse
