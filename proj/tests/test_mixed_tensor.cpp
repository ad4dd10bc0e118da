#include "doctest.h"
#include "oracles.hpp"
#include "yfuse/fusion.hpp"
#include "yfuse/mixed_tensor.hpp"

using namespace yfuse;

namespace {

StandardTableau col(std::initializer_list<int> outer, std::initializer_list<int> inner = {}) {
  return column_tableau(SkewShape(Partition(outer), Partition(inner)));
}

const StandardTableau kEmpty = column_tableau(SkewShape(Partition{}));

/// Every standard tableau of every skew shape lambda/mu with |lambda| <= max_outer and n cells.
std::vector<StandardTableau> skew_tableaux(int n, int max_outer) {
  std::vector<StandardTableau> out;
  for (const auto& outer : oracle::partitions_up_to(max_outer))
    for (const auto& inner : oracle::partitions_up_to(outer.size())) {
      if (!outer.contains(inner) || outer.size() - inner.size() != n) continue;
      for (auto& t : enumerate_standard_tableaux(SkewShape(outer, inner))) out.push_back(t);
    }
  return out;
}

}  // namespace

TEST_CASE("mixed tensor space layout and dimension guard") {
  const MixedTensorSpace s(2, 2, 1);
  CHECK(s.dim() == 8);
  CHECK(s.dual_position(1) == 0);
  CHECK(s.vector_position(2) == 2);
  CHECK(s.is_dual_label(1));
  CHECK_FALSE(s.is_dual_label(2));
  CHECK_THROWS_AS(MixedTensorSpace(3, 8, 0), Error);
  try {
    MixedTensorSpace big(4, 7, 0);
    FAIL("expected BoundExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BoundExceeded);
  }
  CHECK_NOTHROW(MixedTensorSpace(4, 6, 0));
}

TEST_CASE("perm_op") {
  const MixedTensorSpace s(2, 2, 0);
  const MatQ p = perm_op(s, 1, 2).matrix;
  CHECK(equal(mul(p, p), identity<Rational>(4)));
  // basis (a, b) -> (b, a): e_(0,1) = index 1 goes to e_(1,0) = index 2
  CHECK(p(2, 1) == Rational(1));
  CHECK(p(0, 0) == Rational(1));
  const MixedTensorSpace m(2, 2, 2);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      if (i == j) continue;
      if (m.is_dual_label(i) != m.is_dual_label(j)) {
        CHECK_THROWS_AS(perm_op(m, i, j), Error);
        continue;
      }
      CHECK(equal(perm_op(m, i, j).matrix, oracle::swap_matrix(2, 4, i - 1, j - 1)));
    }
  try {
    perm_op(m, 1, 3);
    FAIL("expected MixedFactorKinds");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MixedFactorKinds);
  }
}

TEST_CASE("reversal operators") {
  const MixedTensorSpace s(2, 2, 2);
  const auto [pd, pall] = reversal_ops(s);
  CHECK(equal(pd.matrix, oracle::swap_matrix(2, 4, 0, 1)));
  CHECK(equal(mul(pall.matrix, pall.matrix), identity<Rational>(16)));
  // conjugation by the full reversal maps factor i to 5 - i
  const MatQ p13 = oracle::swap_matrix(2, 4, 0, 2), p24 = oracle::swap_matrix(2, 4, 1, 3);
  CHECK(equal(mul(mul(pall.matrix, p13), pall.matrix), p24));
}

TEST_CASE("contraction_insertion") {
  const MixedTensorSpace s(2, 1, 1);
  const MatQ q = contraction_insertion(s, 1, 1).matrix;
  CHECK(equal(q, oracle::contraction_matrix(2, 2, 0, 1)));
  CHECK(rank(q) == 1);
  CHECK(equal(mul(q, q), scaled(q, Rational(2))));
  for (int N = 1; N <= 3; ++N) {
    const MatQ qn = contraction_insertion(MixedTensorSpace(N, 1, 1), 1, 1).matrix;
    Rational tr(0);
    for (Eigen::Index i = 0; i < qn.rows(); ++i) tr += qn(i, i);
    CHECK(tr == Rational(N));
    CHECK(equal(mul(qn, w0(N)), scaled(w0(N), Rational(N))));
  }
  const MixedTensorSpace m(2, 2, 2);
  for (int l = 1; l <= 2; ++l)
    for (int k = 1; k <= 2; ++k) {
      const MatQ qm = contraction_insertion(m, l, k).matrix;
      CHECK(equal(qm, oracle::contraction_matrix(2, 4, l - 1, 2 + k - 1)));
      CHECK(commutes_with_gl(m, qm));
    }
  CHECK_THROWS_AS(contraction_insertion(m, 3, 1), Error);
  try {
    contraction_insertion(m, 1, 0);
    FAIL("expected IndexOutOfRange");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IndexOutOfRange);
  }
}

TEST_CASE("gl generators satisfy the commutation relations") {
  const MixedTensorSpace s(2, 1, 1);
  const auto flags = s.vector_flags();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          const MatQ eab = to_dense(gl_generator(2, flags, a, b)), ecd = to_dense(gl_generator(2, flags, c, d));
          MatQ rhs = zeros<Rational>(4, 4);
          if (b == c) rhs += to_dense(gl_generator(2, flags, a, d));
          if (d == a) rhs -= to_dense(gl_generator(2, flags, c, b));
          CHECK(equal(MatQ(mul(eab, ecd) - mul(ecd, eab)), rhs));
        }
}

TEST_CASE("F_Omega_op small cases") {
  CHECK(equal(F_Omega_op(col({1}), 3).matrix, identity<Rational>(3)));
  const MatQ sym = F_Omega_op(col({2}), 2).matrix;
  CHECK(equal(sym, MatQ(identity<Rational>(4) + oracle::swap_matrix(2, 2, 0, 1))));
  CHECK(rank(sym) == 3);
  const MatQ alt = F_Omega_op(col({1, 1}), 2).matrix;
  CHECK(equal(alt, MatQ(identity<Rational>(4) - oracle::swap_matrix(2, 2, 0, 1))));
  CHECK(rank(alt) == 1);
  CHECK(equal(F_Omega_op(kEmpty, 2).matrix, identity<Rational>(1)));
}

TEST_CASE("F_Omega_op agrees with the group algebra action") {
  for (int N = 1; N <= 3; ++N)
    for (int n = 1; n <= 4; ++n)
      for (const auto& t : skew_tableaux(n, n + 1)) CHECK(equal(F_Omega_op(t, N).matrix, act_on_tensor(fuse_f_Omega(t), N)));
}

TEST_CASE("rank of F_Omega on windows of the figure shape") {
  // Consecutive row windows of (5,3,3,3,3)/(3,3,2) with at most four cells.
  const std::vector<int> outer = {5, 3, 3, 3, 3}, inner = {3, 3, 2};
  int windows = 0;
  for (std::size_t a = 0; a < outer.size(); ++a)
    for (std::size_t b = a + 1; b <= outer.size(); ++b) {
      std::vector<int> o(outer.begin() + static_cast<long>(a), outer.begin() + static_cast<long>(b)), i;
      for (std::size_t r = a; r < b; ++r) i.push_back(r < inner.size() ? inner[r] : 0);
      while (!i.empty() && i.back() == 0) i.pop_back();
      const SkewShape s{Partition(o), Partition(i)};
      if (s.size() == 0 || s.size() > 4) continue;
      ++windows;
      for (int N = 2; N <= 3; ++N)
        CHECK(rank(F_Omega_op(column_tableau(s), N).matrix) == oracle::ssyt_count_bruteforce(o, i, N));
    }
  CHECK(windows >= 4);
}

TEST_CASE("G_ops") {
  const auto [g, gp] = G_ops(col({1}), col({1}), 2, 0);
  const MatQ q = oracle::contraction_matrix(2, 2, 0, 1);
  CHECK(equal(g.matrix, MatQ(identity<Rational>(4) - scaled(q, Rational(1, 2)))));
  CHECK(equal(g.matrix, gp.matrix));
  const auto [g0, gp0] = G_ops(col({2, 1}), kEmpty, 2, 0);
  CHECK(equal(g0.matrix, identity<Rational>(8)));
  CHECK(equal(gp0.matrix, identity<Rational>(8)));
  // Raising M by one raises every denominator by one.
  const auto [g1, gp1] = G_ops(col({1}), col({1}), 2, 1);
  CHECK(g1.matrix(0, 0) == Rational(1) - Rational(1, 3));
  CHECK(g.matrix(0, 0) == Rational(1) - Rational(1, 2));
  try {
    G_ops(col({1, 1}), col({1, 1}), 2, 0);
    FAIL("expected DenominatorZero");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DenominatorZero);
  }
}

TEST_CASE("F_OmOmt_op small cases") {
  const MatQ f = F_OmOmt_op(col({1}), col({1}), 2, 0).matrix;
  const MatQ q = oracle::contraction_matrix(2, 2, 0, 1);
  CHECK(equal(f, MatQ(identity<Rational>(4) - scaled(q, Rational(1, 2)))));
  CHECK(rank(f) == 3);
  CHECK(rank(f) == oracle::rational_dimension({1}, {1}, 2));
  CHECK(equal(F_OmOmt_op(col({2, 1}), kEmpty, 2, 0).matrix, F_Omega_op(col({2, 1}), 2).matrix));
}

TEST_CASE("ordered products agree in either exchange order") {
  int instances = 0;
  for (int n = 0; n <= 3; ++n)
    for (int nt = 0; nt + n <= 4; ++nt) {
      if (n == 0 && nt == 0) continue;
      for (const auto& om : n == 0 ? std::vector<StandardTableau>{kEmpty} : skew_tableaux(n, n + 1))
        for (const auto& omt : nt == 0 ? std::vector<StandardTableau>{kEmpty} : skew_tableaux(nt, nt + 1))
          for (int NM = 1; NM <= 4; ++NM) {
            if (conjugate(om.shape().outer())[1] + conjugate(omt.shape().outer())[1] > NM) continue;
            for (int N = 1; N <= NM; ++N) {
              if (oracle::power(N, n + nt) > 81) continue;
              CHECK(check_G_exchange(om, omt, N, NM - N));
              ++instances;
            }
          }
    }
  CHECK(instances > 50);
}

TEST_CASE("traceless_subspace") {
  CHECK(traceless_subspace(MixedTensorSpace(2, 1, 1)).cols() == 3);
  CHECK(traceless_subspace(MixedTensorSpace(1, 1, 1)).cols() == 0);
  CHECK(traceless_subspace(MixedTensorSpace(2, 2, 0)).cols() == 4);
  // W_{1,1} is gl_N and its traceless part has dimension N^2 - 1; for W_{2,1}
  // compare against the kernel of the entry-by-entry contraction matrices.
  for (int N = 1; N <= 3; ++N) {
    CHECK(traceless_subspace(MixedTensorSpace(N, 1, 1)).cols() == N * N - 1);
    const MatQ q1 = oracle::contraction_matrix(N, 3, 0, 1), q2 = oracle::contraction_matrix(N, 3, 0, 2);
    MatQ stacked(2 * q1.rows(), q1.cols());
    stacked.topRows(q1.rows()) = q1;
    stacked.bottomRows(q2.rows()) = q2;
    const MatQ t = traceless_subspace(MixedTensorSpace(N, 2, 1));
    CHECK(t.cols() == kernel(stacked).cols());
    CHECK(is_zero_matrix(mul(stacked, t)));
  }
}

TEST_CASE("mixed symmetrizers are gl_N-equivariant") {
  CHECK(commutes_with_gl(MixedTensorSpace(2, 2, 1), F_OmOmt_op(col({2}), col({1}), 2, 0).matrix));
  CHECK(commutes_with_gl(MixedTensorSpace(2, 1, 1), F_OmOmt_op(col({2}, {1}), col({1}), 2, 1).matrix));
  CHECK_THROWS_AS(commutes_with_gl(MixedTensorSpace(2, 2, 1), identity<Rational>(4)), Error);
  CHECK(commutes_with_gl(MixedTensorSpace(3, 1, 2), F_OmOmt_op(col({1}), col({1, 1}), 3, 0).matrix));
  MatQ corner = zeros<Rational>(4, 4);
  corner(0, 0) = 1;
  CHECK_FALSE(commutes_with_gl(MixedTensorSpace(2, 1, 1), corner));
}

TEST_CASE("symmetrizer identities for straight shapes") {
  SUBCASE("single boxes") {
    const auto r = verify_symmetrizer_identities(col({1}), col({1}), 2);
    CHECK(r.all());
    CHECK(r.rank == 3);
  }
  SUBCASE("no dual factors") {
    const auto r = verify_symmetrizer_identities(col({2}), kEmpty, 2);
    CHECK(r.all());
    CHECK(r.rank == 3);
  }
  SUBCASE("one box against a column of two") {
    const auto r = verify_symmetrizer_identities(col({1}), col({1, 1}), 3);
    CHECK(r.all());
    CHECK(r.rank == oracle::rational_dimension({1}, {1, 1}, 3));
  }
  SUBCASE("all pairs with l + l~ <= 4 and N <= 3") {
    int instances = 0;
    for (int N = 1; N <= 3; ++N)
      for (int l = 0; l <= 4; ++l)
        for (int lt = 0; lt + l <= 4; ++lt)
          for (const auto& p : partitions_of(l))
            for (const auto& pt : partitions_of(lt)) {
              if (conjugate(p)[1] + conjugate(pt)[1] > N) continue;
              for (const auto& t : enumerate_standard_tableaux(SkewShape(p)))
                for (const auto& tt : enumerate_standard_tableaux(SkewShape(pt))) {
                  const auto r = verify_symmetrizer_identities(t, tt, N);
                  CHECK(r.all());
                  CHECK(r.rank == oracle::rational_dimension(p.parts(), pt.parts(), N));
                  ++instances;
                }
            }
    CHECK(instances > 20);
  }
}

TEST_CASE("nonzero symmetrizer exactly when the branching space is nonzero") {
  for (int M = 0; M <= 1; ++M)
    for (int N = 1; N <= 2; ++N)
      for (const auto& lam : oracle::partitions_up_to(3))
        for (const auto& mu : oracle::partitions_up_to(lam.size()))
          for (const auto& lamt : oracle::partitions_up_to(2))
            for (const auto& mut : oracle::partitions_up_to(lamt.size())) {
              if (!lam.contains(mu) || !lamt.contains(mut)) continue;
              const int n = lam.size() - mu.size(), nt = lamt.size() - mut.size();
              if (n + nt == 0 || n + nt > 3) continue;
              if (conjugate(lam)[1] + conjugate(lamt)[1] > N + M || conjugate(mu)[1] + conjugate(mut)[1] > M) continue;
              const auto om = column_tableau(SkewShape(lam, mu)), omt = column_tableau(SkewShape(lamt, mut));
              const bool nonzero = rank(F_OmOmt_op(om, omt, N, M).matrix) > 0;
              CHECK(nonzero == nonvanishing_condition(lam, lamt, mu, mut, N));
            }
}

TEST_CASE("R-matrix identities at sample points") {
  for (int N = 1; N <= 3; ++N) {
    const auto results = verify_rmatrix_identities(N);
    CHECK(results.size() == 9);
    for (const auto& r : results) {
      INFO(r.name << " N=" << N);
      CHECK(r.passed);
      CHECK(r.samples >= 4);
    }
  }
}

TEST_CASE("R-matrix spot values") {
  const MixedTensorSpace s(2, 2, 0);
  const MatQ p = perm_op(s, 1, 2).matrix, id = identity<Rational>(4);
  const MatQ r12 = id - scaled(p, Rational(1, 2)), r21 = id - scaled(p, Rational(-1, 2));
  CHECK(equal(mul(r12, r21), scaled(id, Rational(3, 4))));
  const MixedTensorSpace m(2, 1, 1);
  const MatQ q = contraction_insertion(m, 1, 1).matrix;
  // tilde R(-2, 5) bar R(2, 5) with L = 2
  const MatQ lhs = mul(MatQ(id - scaled(q, inverse(Rational(-7)))), MatQ(id - scaled(q, inverse(Rational(9)))));
  CHECK(equal(lhs, id));
}
