#pragma once

#include <Eigen/Core>
#include <string>
#include <utility>
#include <vector>

#include "yfuse/rational.hpp"

namespace yfuse {

/// Univariate polynomial with rational coefficients, stored ascending
/// (coeffs()[i] multiplies x^i). Trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);
  Polynomial(int c) : Polynomial(Rational(c)) {}
  explicit Polynomial(std::vector<Rational> coeffs);

  /// The monomial x.
  static Polynomial x();
  /// c * x^k.
  static Polynomial monomial(const Rational& c, int k);
  /// x - a.
  static Polynomial linear_root(const Rational& a);

  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational coeff(int i) const;

  Rational eval(const Rational& a) const;
  /// p(x) -> p(x + a).
  Polynomial shifted(const Rational& a) const;
  /// p(x) -> p(-x).
  Polynomial reflected() const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return a.c_ != b.c_; }

  /// Euclidean division: returns (quotient, remainder).
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  /// Monic gcd; gcd(0, 0) = 0.
  static Polynomial gcd(Polynomial a, Polynomial b);
  /// Exact division, b must divide a.
  static Polynomial exact_div(const Polynomial& a, const Polynomial& b);

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

}  // namespace yfuse

namespace Eigen {

template <>
struct NumTraits<yfuse::Polynomial> : GenericNumTraits<yfuse::Polynomial> {
  using Real = yfuse::Polynomial;
  using NonInteger = yfuse::Polynomial;
  using Nested = yfuse::Polynomial;
  using Literal = yfuse::Polynomial;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
