#include "h10/core/ratfunc.hpp"

#include <stdexcept>

namespace h10 {

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::domain_error("division by zero rational function");
  if (num.is_zero()) {
    num_ = Polynomial();
    den_ = Polynomial(1);
    return;
  }
  Polynomial n = num, d = den;
  if (!d.is_constant() && !n.is_constant()) {
    const Polynomial g = gcd(n, d);
    if (!g.is_constant()) {
      n = divide_exact(n, g);
      d = divide_exact(d, g);
    }
  }
  const BigRational lead = d.leading();
  if (lead != 1) {
    const BigRational inv = 1 / lead;
    n *= inv;
    d *= inv;
  }
  num_ = std::move(n);
  den_ = std::move(d);
}

RationalFunction ratfunc_normalize(const Polynomial& num, const Polynomial& den) {
  return RationalFunction(num, den);
}

BigRational RationalFunction::operator()(const BigRational& x) const {
  const BigRational d = den_(x);
  if (d == 0) throw std::domain_error("rational function has a pole at " + x.get_str());
  return num_(x) / d;
}

RationalFunction RationalFunction::reciprocal_substitution() const {
  if (is_zero()) return *this;
  // N(1/T)/D(1/T) = T^(dD - dN) * rev(N) / rev(D)
  const int dn = num_.degree(), dd = den_.degree();
  Polynomial n = num_.reversed(static_cast<std::size_t>(dn));
  Polynomial d = den_.reversed(static_cast<std::size_t>(dd));
  if (dd > dn)
    n *= Polynomial::monomial(1, static_cast<std::size_t>(dd - dn));
  else if (dn > dd)
    d *= Polynomial::monomial(1, static_cast<std::size_t>(dn - dd));
  return RationalFunction(n, d);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)),
                          Reduced{});
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, Reduced{}); }

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) return *this = RationalFunction(num_ + o.num_, den_);
  if (den_.is_constant() || o.den_.is_constant())
    return *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  // a/b + c/d = (a d' + c b') / (b d') with g = gcd(b, d), b = g b', d = g d'.
  const Polynomial g = gcd(den_, o.den_);
  const Polynomial bp = divide_exact(den_, g), dp = divide_exact(o.den_, g);
  return *this = RationalFunction(num_ * dp + o.num_ * bp, den_ * dp);
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFunction();
  // Cross-cancel: (a/b)(c/d) with gcd(a,d), gcd(c,b).
  Polynomial a = num_, b = den_, c = o.num_, d = o.den_;
  if (!a.is_constant() && !d.is_constant()) {
    const Polynomial g = gcd(a, d);
    if (!g.is_constant()) {
      a = divide_exact(a, g);
      d = divide_exact(d, g);
    }
  }
  if (!c.is_constant() && !b.is_constant()) {
    const Polynomial g = gcd(c, b);
    if (!g.is_constant()) {
      c = divide_exact(c, g);
      b = divide_exact(b, g);
    }
  }
  Polynomial n = a * c, m = b * d;
  const BigRational lead = m.leading();
  if (lead != 1) {
    n *= 1 / lead;
    m *= 1 / lead;
  }
  num_ = std::move(n);
  den_ = std::move(m);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

std::string RationalFunction::to_string(const char* var) const {
  if (den_ == Polynomial(1)) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

} // namespace h10
