#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "yfuse/polynomial.hpp"
#include "yfuse/rational.hpp"

namespace yfuse {

/// Normalized quotient num/den of univariate rational polynomials:
/// den is monic and gcd(num, den) = 1. The zero function is 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(int c) : num_(c), den_(1) {}
  RationalFunction(const Rational& c) : num_(c), den_(1) {}
  RationalFunction(const Polynomial& p) : num_(p), den_(1) {}
  RationalFunction(const Polynomial& num, const Polynomial& den);

  /// The indeterminate x.
  static RationalFunction x();
  /// 1 / (x - a).
  static RationalFunction inv_linear(const Rational& a);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  /// Value of a constant function.
  Rational constant_value() const;

  /// Exact value at a; throws PoleAt when the denominator vanishes there.
  Rational eval(const Rational& a) const;
  /// Value at 0 of the normalized function; throws NotRegular at a pole.
  Rational regular_limit_at_zero() const;
  /// Limit as x -> infinity; throws NotRegular when deg num > deg den.
  Rational limit_at_infinity() const;
  /// Coefficients c_0..c_{K-1} of the expansion f = sum_k c_k x^{-k} at
  /// infinity; requires deg num <= deg den.
  std::vector<Rational> series_at_infinity(int K) const;

  /// f(x) -> f(x + a).
  RationalFunction shifted(const Rational& a) const;
  /// f(x) -> f(-x).
  RationalFunction reflected() const;
  /// f(x) -> f(-x + a).
  RationalFunction reflected_shifted(const Rational& a) const { return reflected().shifted(-a); }

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(const RationalFunction& a) { return RationalFunction(-a.num_, a.den_, 0); }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  std::string str(const std::string& var = "x") const;

 private:
  // Trusted constructor: already normalized.
  RationalFunction(Polynomial num, Polynomial den, int) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }
inline RationalFunction inverse(const RationalFunction& f) { return RationalFunction(1) / f; }

}  // namespace yfuse

namespace Eigen {

template <>
struct NumTraits<yfuse::RationalFunction> : GenericNumTraits<yfuse::RationalFunction> {
  using Real = yfuse::RationalFunction;
  using NonInteger = yfuse::RationalFunction;
  using Nested = yfuse::RationalFunction;
  using Literal = yfuse::RationalFunction;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 128,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
