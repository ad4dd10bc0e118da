#include "yfuse/rational_function.hpp"

namespace yfuse {

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  normalize();
}

RationalFunction RationalFunction::x() { return RationalFunction(Polynomial::x()); }

RationalFunction RationalFunction::inv_linear(const Rational& a) {
  return RationalFunction(Polynomial(1), Polynomial::linear_root(a), 0);
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (!den_.is_constant()) {
    Polynomial g = Polynomial::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = Polynomial::exact_div(num_, g);
      den_ = Polynomial::exact_div(den_, g);
    }
  }
  const Rational lead = den_.lead();
  if (!lead.is_one()) {
    const Rational inv = inverse(lead);
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) throw Error(ErrorKind::InvalidInput, "rational function is not constant: " + str());
  return num_.coeff(0);
}

Rational RationalFunction::eval(const Rational& a) const {
  const Rational d = den_.eval(a);
  if (d.is_zero()) throw Error(ErrorKind::PoleAt, "pole at " + a.str() + " of " + str());
  return num_.eval(a) / d;
}

Rational RationalFunction::regular_limit_at_zero() const {
  const Rational d = den_.coeff(0);
  if (d.is_zero()) throw Error(ErrorKind::NotRegular, "not regular at 0: " + str());
  return num_.coeff(0) / d;
}

Rational RationalFunction::limit_at_infinity() const {
  if (num_.degree() > den_.degree()) throw Error(ErrorKind::NotRegular, "unbounded at infinity: " + str());
  if (num_.degree() < den_.degree()) return Rational(0);
  return num_.lead() / den_.lead();
}

std::vector<Rational> RationalFunction::series_at_infinity(int K) const {
  const int d = den_.degree();
  if (num_.degree() > d) throw Error(ErrorKind::NotRegular, "unbounded at infinity: " + str());
  // With u = 1/x: f = (sum_i n_i u^{d-i}) / (sum_i d_i u^{d-i}); divide power series in u.
  auto coeff_u = [d](const Polynomial& p, int k) { return p.coeff(d - k); };
  std::vector<Rational> out(static_cast<std::size_t>(std::max(K, 0)), Rational(0));
  const Rational inv_b0 = inverse(coeff_u(den_, 0));
  for (int k = 0; k < K; ++k) {
    Rational s = coeff_u(num_, k);
    for (int j = 1; j <= std::min(k, d); ++j) s -= coeff_u(den_, j) * out[static_cast<std::size_t>(k - j)];
    out[static_cast<std::size_t>(k)] = s * inv_b0;
  }
  return out;
}

RationalFunction RationalFunction::shifted(const Rational& a) const {
  if (a.is_zero()) return *this;
  return RationalFunction(num_.shifted(a), den_.shifted(a));
}

RationalFunction RationalFunction::reflected() const { return RationalFunction(num_.reflected(), den_.reflected()); }

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) normalize();
    else if (num_.is_zero()) den_ = Polynomial(1);
    return *this;
  }
  if (o.den_.is_one()) {
    num_ += o.num_ * den_;
    return *this;  // gcd(num + q*den, den) = gcd(num, den) = 1
  }
  if (den_.is_one()) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    return *this;
  }
  const Polynomial g = Polynomial::gcd(den_, o.den_);
  const Polynomial a = Polynomial::exact_div(o.den_, g);
  const Polynomial b = Polynomial::exact_div(den_, g);
  num_ = num_ * a + o.num_ * b;
  den_ = den_ * a;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RationalFunction();
  if (o.is_constant()) {
    num_ *= o.num_.coeff(0);
    return *this;
  }
  if (is_constant()) {
    const Rational c = num_.coeff(0);
    *this = o;
    num_ *= c;
    return *this;
  }
  // Cross-cancel before multiplying: both inputs are already reduced.
  const Polynomial g1 = Polynomial::gcd(num_, o.den_);
  const Polynomial g2 = Polynomial::gcd(o.num_, den_);
  Polynomial n = Polynomial::exact_div(num_, g1) * Polynomial::exact_div(o.num_, g2);
  Polynomial d = Polynomial::exact_div(den_, g2) * Polynomial::exact_div(o.den_, g1);
  num_ = std::move(n);
  den_ = std::move(d);
  const Rational lead = den_.lead();
  if (!lead.is_one()) {
    num_ *= inverse(lead);
    den_ *= inverse(lead);
  }
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function division by zero");
  return *this *= RationalFunction(o.den_, o.num_);
}

std::string RationalFunction::str(const std::string& var) const {
  if (den_.is_one()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace yfuse
