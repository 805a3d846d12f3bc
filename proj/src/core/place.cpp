#include "h10/core/place.hpp"

#include <sstream>
#include <stdexcept>

namespace h10 {

namespace {

int multiplicity(Polynomial f, const Polynomial& prime) {
  int k = 0;
  for (;;) {
    auto [q, r] = divrem(f, prime);
    if (!r.is_zero()) return k;
    f = std::move(q);
    ++k;
  }
}

// Power series of n/d at T = 0 where d(0) != 0: first `count` coefficients.
std::vector<BigRational> series_quotient(const Polynomial& n, const Polynomial& d, int count) {
  const std::vector<BigRational> nc = n.coefficients(), dc = d.coefficients();
  const BigRational inv_d0 = 1 / dc.at(0);
  std::vector<BigRational> c(static_cast<std::size_t>(std::max(count, 0)));
  for (std::size_t k = 0; k < c.size(); ++k) {
    BigRational acc = k < nc.size() ? nc[k] : BigRational(0);
    for (std::size_t j = 1; j <= k && j < dc.size(); ++j) acc -= dc[j] * c[k - j];
    c[k] = acc * inv_d0;
  }
  return c;
}

RationalFunction uniformizer(const Place& place) {
  switch (place.kind()) {
    case Place::Kind::at_zero: return RationalFunction::T();
    case Place::Kind::at_infinity: return RationalFunction::T().inverse();
    case Place::Kind::at_irreducible: return RationalFunction(place.prime());
  }
  return {};
}

} // namespace

Place Place::irreducible(const Polynomial& p, bool trusted) {
  if (p.degree() < 1) throw std::invalid_argument("place polynomial must have degree >= 1");
  const Irreducibility verdict = irreducibility_over_Q(p);
  if (verdict == Irreducibility::reducible ||
      (verdict == Irreducibility::unknown && !trusted))
    throw std::invalid_argument("place polynomial is not certified irreducible: " + p.to_string());
  Polynomial m = p.monic();
  if (m == Polynomial::variable()) return zero();
  return Place(Kind::at_irreducible, std::move(m));
}

std::string Place::to_string() const {
  switch (kind_) {
    case Kind::at_zero: return "T";
    case Kind::at_infinity: return "1/T";
    case Kind::at_irreducible: return prime_.to_string();
  }
  return {};
}

int ord_at(const Polynomial& f, const Place& place) {
  if (f.is_zero()) throw std::domain_error("valuation of zero undefined");
  switch (place.kind()) {
    case Place::Kind::at_zero: return f.low_degree();
    case Place::Kind::at_infinity: return -f.degree();
    case Place::Kind::at_irreducible: return multiplicity(f, place.prime());
  }
  return 0;
}

int ord_at(const RationalFunction& f, const Place& place) {
  if (f.is_zero()) throw std::domain_error("valuation of zero undefined");
  if (place.kind() == Place::Kind::at_infinity) return f.den().degree() - f.num().degree();
  return ord_at(f.num(), place) - ord_at(f.den(), place);
}

BigRational LaurentSeries::coefficient(int exponent) const {
  if (exponent >= precision) throw std::out_of_range("coefficient beyond series precision");
  const int i = exponent - lowest_exponent;
  if (i < 0 || i >= static_cast<int>(coefficients.size())) return 0;
  return coefficients[static_cast<std::size_t>(i)];
}

RationalFunction LaurentSeries::truncation() const {
  const RationalFunction pi = uniformizer(place);
  RationalFunction sum;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i] == 0) continue;
    sum += RationalFunction(coefficients[i]) * pi.pow(lowest_exponent + static_cast<int>(i));
  }
  return sum;
}

std::string LaurentSeries::to_string() const {
  std::string var;
  switch (place.kind()) {
    case Place::Kind::at_zero: var = "T"; break;
    case Place::Kind::at_infinity: var = "T^-1"; break;
    case Place::Kind::at_irreducible: var = "(" + place.prime().to_string() + ")"; break;
  }
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i] == 0) continue;
    const int e = lowest_exponent + static_cast<int>(i);
    if (!first) os << " + ";
    first = false;
    os << coefficients[i].get_str();
    if (e != 0) os << "*" << var << "^" << e;
  }
  if (!first) os << " + ";
  os << "O(" << var << "^" << precision << ")";
  return os.str();
}

LaurentSeries laurent_expand(const RationalFunction& f, const Place& place, int precision) {
  if (f.is_zero()) throw std::domain_error("valuation of zero undefined");
  RationalFunction g = f;
  switch (place.kind()) {
    case Place::Kind::at_zero: break;
    case Place::Kind::at_infinity: g = f.reciprocal_substitution(); break;
    case Place::Kind::at_irreducible:
      if (place.degree() != 1)
        throw std::invalid_argument("Laurent expansion supported only at degree-one places");
      {
        const BigRational c = -place.prime().coeff(0);
        g = RationalFunction(f.num().shifted(c), f.den().shifted(c));
      }
      break;
  }
  const int a = g.num().low_degree(), b = g.den().low_degree();
  const int e = a - b;
  if (precision <= e)
    throw std::invalid_argument("precision " + std::to_string(precision) +
                                " does not exceed the order " + std::to_string(e));
  LaurentSeries s;
  s.place = place;
  s.lowest_exponent = e;
  s.precision = precision;
  s.coefficients = series_quotient(g.num().divide_by_power_of_T(static_cast<std::size_t>(a)),
                                   g.den().divide_by_power_of_T(static_cast<std::size_t>(b)),
                                   precision - e);
  return s;
}

BigRational constant_term_infinity(const RationalFunction& f) {
  if (f.is_zero()) return 0;
  const int dn = f.num().degree(), dd = f.den().degree();
  if (dn > dd) throw std::domain_error("pole at infinity");
  if (dn < dd) return 0;
  return f.num().leading() / f.den().leading();
}

} // namespace h10
