#include <random>

#include "doctest.h"
#include "yfuse/group_algebra.hpp"
#include "yfuse/linalg.hpp"
#include "yfuse/rational_function.hpp"

using namespace yfuse;

namespace {

RationalFunction X() { return RationalFunction::x(); }

MatQ random_matrix(std::mt19937_64& rng, int n) {
  MatQ m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Rational(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 5) + 1);
  return m;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(Rational::parse("6/4").str() == "3/2");
  CHECK(Rational::parse("-5").str() == "-5");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("a"), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("polynomial gcd and division") {
  const Polynomial x = Polynomial::x();
  const Polynomial a = (x - Polynomial(1)) * (x + Polynomial(2));
  const Polynomial b = (x - Polynomial(1)) * (x - Polynomial(3));
  CHECK(Polynomial::gcd(a, b) == x - Polynomial(1));
  auto [q, r] = Polynomial::divmod(a, x - Polynomial(1));
  CHECK(q == x + Polynomial(2));
  CHECK(r.is_zero());
  CHECK((x * x).shifted(1) == x * x + Polynomial(2) * x + Polynomial(1));
  CHECK((x * x * x).reflected() == -(x * x * x));
}

TEST_CASE("rf_eval") {
  const RationalFunction f = X() * X() / (X() * X() - 1);
  CHECK(f.eval(2) == Rational(4, 3));
  CHECK_THROWS_WITH_AS(inverse(X()).eval(0), doctest::Contains("PoleAt"), Error);
  CHECK((RationalFunction(1) - inverse(X())).limit_at_infinity() == Rational(1));
}

TEST_CASE("regular_limit_at_zero") {
  CHECK(((X() + 2) / (X() + 1)).regular_limit_at_zero() == Rational(2));
  CHECK((X() / X()).regular_limit_at_zero() == Rational(1));
  CHECK(RationalFunction(Polynomial::x() * Polynomial::x(), Polynomial::x()).den().is_one());
  try {
    (void)inverse(X()).regular_limit_at_zero();
    FAIL("expected NotRegular");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotRegular);
  }
  const RationalFunction g = (X() * X() + 3) / (X() - 5);
  CHECK(g.regular_limit_at_zero() == g.eval(0));
}

TEST_CASE("rational function normalization") {
  const RationalFunction a = (X() - 1) / (X() + 1);
  const RationalFunction b = (X() + 1) / (X() - 1);
  CHECK(a * b == RationalFunction(1));
  CHECK(a - a == RationalFunction(0));
  CHECK((RationalFunction(2) * X()) / (RationalFunction(4) * X() * X()) == RationalFunction(Rational(1, 2)) / X());
  const RationalFunction h = 1 / (X() - 2) + 1 / (X() + 2);
  CHECK(h == (2 * X()) / (X() * X() - 4));
}

TEST_CASE("series at infinity") {
  // x^2/(x^2-1) = 1 + x^-2 + x^-4 + ...
  const auto s = (X() * X() / (X() * X() - 1)).series_at_infinity(5);
  CHECK(s[0] == Rational(1));
  CHECK(s[1] == Rational(0));
  CHECK(s[2] == Rational(1));
  CHECK(s[3] == Rational(0));
  CHECK(s[4] == Rational(1));
  // 1/(x-z) = sum z^{k-1} x^{-k}
  const auto t = RationalFunction::inv_linear(3).series_at_infinity(4);
  CHECK(t[1] == Rational(1));
  CHECK(t[2] == Rational(3));
  CHECK(t[3] == Rational(9));
}

TEST_CASE("mat_rank of contraction operator") {
  // Oracle: entries delta_ab delta_cd on (C^2)* x C^2 written out by hand.
  MatQ q = zeros<Rational>(4, 4);
  for (int c = 0; c < 2; ++c)
    for (int a = 0; a < 2; ++a) q(c * 2 + c, a * 2 + a) = 1;
  CHECK(rank(q) == 1);
  CHECK(equal<Rational>(mul(q, q), scaled<Rational>(q, 2)));
}

TEST_CASE("mat_inverse and kron") {
  CHECK(equal<Rational>(inverse(identity<Rational>(3)), identity<Rational>(3)));
  MatQ a(2, 2);
  a << 1, 2, 2, 4;
  CHECK(rank(a) == 1);
  CHECK(rank(kron<Rational>(identity<Rational>(2), a)) == 2);
  CHECK_THROWS_AS(inverse(a), Error);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    MatQ m = random_matrix(rng, 5);
    if (rank(m) < 5) continue;
    CHECK(equal<Rational>(mul(m, inverse(m)), identity<Rational>(5)));
  }
}

TEST_CASE("kernel vectors are annihilated") {
  MatQ a(2, 4);
  a << 1, 2, 3, 4, 2, 4, 6, 9;
  const MatQ k = kernel(a);
  CHECK(k.cols() == 2);
  CHECK(is_zero_matrix<Rational>(mul(a, k)));
}

TEST_CASE("inverse over the function field") {
  MatF m(2, 2);
  m << X(), RationalFunction(1), RationalFunction(1), X();
  const MatF inv = inverse(m);
  CHECK(equal<RationalFunction>(mul(m, inv), identity<RationalFunction>(2)));
  CHECK(inv(0, 0) == X() / (X() * X() - 1));
}

TEST_CASE("solve_intertwiner") {
  SUBCASE("identity generators give the full matrix space") {
    CHECK(solve_intertwiner<Rational>({identity<Rational>(2)}, {identity<Rational>(2)}).size() == 4);
  }
  SUBCASE("diag(1,2) to diag(2,1) gives antidiagonal matrices") {
    MatQ a = zeros<Rational>(2, 2), b = zeros<Rational>(2, 2);
    a(0, 0) = 1;
    a(1, 1) = 2;
    b(0, 0) = 2;
    b(1, 1) = 1;
    const auto sol = solve_intertwiner<Rational>({a}, {b});
    CHECK(sol.size() == 2);
    for (const auto& x : sol) {
      CHECK(x(0, 0).is_zero());
      CHECK(x(1, 1).is_zero());
      CHECK(equal<Rational>(mul(x, a), mul(b, x)));
    }
  }
  SUBCASE("inequivalent one-dimensional representations") {
    MatQ a(1, 1), b(1, 1);
    a << 1;
    b << 2;
    CHECK(solve_intertwiner<Rational>({a}, {b}).empty());
  }
}

TEST_CASE("commutant_dimension") {
  std::vector<MatQ> units;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      MatQ e = zeros<Rational>(2, 2);
      e(i, j) = 1;
      units.push_back(e);
    }
  CHECK(commutant_dimension(units) == 1);
  CHECK(commutant_dimension<Rational>({identity<Rational>(3)}) == 9);
  MatQ d = zeros<Rational>(2, 2);
  d(0, 0) = 1;
  d(1, 1) = 2;
  CHECK(commutant_dimension<Rational>({d}) == 2);
}

TEST_CASE("ga_multiply") {
  const auto one = GroupAlgebraQ::one(2);
  const auto s = transposition_element<Rational>(2, 1, 2);
  CHECK((one + s) * (one - s) == GroupAlgebraQ(2));
  CHECK((one + s) * (one + s) == (one + s) * Rational(2));
  CHECK_THROWS_AS(GroupAlgebraQ::one(2) * GroupAlgebraQ::one(3), Error);
}

TEST_CASE("permutation composition and printing") {
  const Permutation s = Permutation::transposition(3, 1, 2);
  const Permutation t = Permutation::transposition(3, 2, 3);
  CHECK((s * t).cycle_str() == "(1 2 3)");
  CHECK(Permutation::identity(3).cycle_str() == "id");
  CHECK((s * s).is_identity());
  CHECK(Permutation::all(4).size() == 24);
}

TEST_CASE("ga_act_on_tensor") {
  CHECK(equal<Rational>(act_on_tensor(GroupAlgebraQ::one(2), 2), identity<Rational>(4)));
  const MatQ p = act_on_tensor(transposition_element<Rational>(2, 1, 2), 2);
  // swap e_a x e_b -> e_b x e_a, written out by hand
  MatQ swap = zeros<Rational>(4, 4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) swap(b * 2 + a, a * 2 + b) = 1;
  CHECK(equal<Rational>(p, swap));
  CHECK(rank(act_on_tensor(GroupAlgebraQ::one(2) + transposition_element<Rational>(2, 1, 2), 2)) == 3);
}

TEST_CASE("ga_act_on_tensor is a homomorphism") {
  std::mt19937_64 rng(11);
  const auto perms = Permutation::all(3);
  for (int trial = 0; trial < 4; ++trial) {
    GroupAlgebraQ a(3), b(3);
    for (int k = 0; k < 3; ++k) {
      a.add(perms[rng() % perms.size()], Rational(static_cast<long>(rng() % 7) - 3));
      b.add(perms[rng() % perms.size()], Rational(static_cast<long>(rng() % 7) - 3));
    }
    CHECK(equal<Rational>(act_on_tensor(a * b, 2), mul(act_on_tensor(a, 2), act_on_tensor(b, 2))));
  }
}

TEST_CASE("theta and iota") {
  const auto one = GroupAlgebraQ::one(2);
  const auto s = transposition_element<Rational>(2, 1, 2);
  CHECK(theta(one + s, 1) == one);
  CHECK(theta(one + s, 0) == one + s);
  CHECK(iota(s, 1) == transposition_element<Rational>(3, 2, 3));
}
