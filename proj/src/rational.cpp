#include "yfuse/rational.hpp"

#include <cctype>

namespace yfuse {

Rational::Rational(long p, long q) {
  if (q == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  q_ = mpq_class(p, q);
  q_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string p = s.substr(0, slash);
  std::string q = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_int(p) || !is_int(q)) throw Error(ErrorKind::InvalidInput, "not a rational: '" + s + "'");
  if (p[0] == '+') p.erase(0, 1);
  if (q[0] == '+') q.erase(0, 1);
  mpz_class pn(p), qn(q);
  if (qn == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator: '" + s + "'");
  Rational r;
  r.q_ = mpq_class(pn, qn);
  r.q_.canonicalize();
  return r;
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
  q_ /= o.q_;
  return *this;
}

}  // namespace yfuse
