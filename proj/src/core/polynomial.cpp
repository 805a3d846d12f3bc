#include "h10/core/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace h10 {

namespace {

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Integer Horner evaluation of sum a_i (n/d)^i, scaled: returns
// sum a_i n^i d^(D-i) with D = deg.
BigInt homogeneous_eval(const zpoly::ZPoly& a, const BigInt& n, const BigInt& d) {
  if (a.empty()) return 0;
  BigInt acc = a.back();
  BigInt dpow = 1;
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    dpow *= d;
    acc = acc * n + a[i] * dpow;
  }
  return acc;
}

// Positive divisors of |n| (n != 0), by trial division. Throws when a
// cofactor above the trial bound is composite.
std::vector<BigInt> positive_divisors(const BigInt& value) {
  BigInt n = abs(value);
  std::vector<std::pair<BigInt, unsigned>> factors;
  for (unsigned long p = 2; p < 1000000 && BigInt(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    if (e) factors.emplace_back(BigInt(p), e);
  }
  if (n > 1) {
    if (n >= BigInt(1000000) * 1000000 && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
      throw std::domain_error("coefficient too large to factor for rational-root search");
    factors.emplace_back(n, 1);
  }
  std::vector<BigInt> divs{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divs.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

bool is_square(const BigInt& n, BigInt& root) {
  if (n < 0) return false;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root * root == n;
}

// Does the primitive quartic a admit a factorization into two integer quadratics?
bool has_quadratic_factors(const zpoly::ZPoly& a) {
  const BigInt &a0 = a[0], &a1 = a[1], &a2 = a[2], &a3 = a[3], &a4 = a[4];
  for (const auto& b2 : positive_divisors(a4)) {
    const BigInt c2 = a4 / b2;
    for (const auto& d0 : positive_divisors(a0)) {
      for (int sgn : {1, -1}) {
        const BigInt b0 = d0 * sgn;
        const BigInt c0 = a0 / b0;
        // b1 c1 = s and c2 b1 + b2 c1 = a3  =>  c2 b1^2 - a3 b1 + s b2 = 0
        const BigInt s = a2 - b2 * c0 - b0 * c2;
        const BigInt disc = a3 * a3 - 4 * c2 * s * b2;
        BigInt root;
        if (!is_square(disc, root)) continue;
        for (const BigInt& r : {root, BigInt(-root)}) {
          const BigInt num = a3 + r;
          const BigInt den = 2 * c2;
          if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) continue;
          const BigInt b1 = num / den;
          const BigInt rest = a3 - c2 * b1;
          if (!mpz_divisible_p(rest.get_mpz_t(), b2.get_mpz_t())) continue;
          const BigInt c1 = rest / b2;
          if (b1 * c0 + b0 * c1 == a1 && b1 * c1 == s) return true;
        }
      }
    }
  }
  return false;
}

} // namespace

Polynomial::Polynomial(const BigRational& constant) {
  if (constant != 0) {
    num_ = {constant.get_num()};
    den_ = constant.get_den();
  }
}

Polynomial Polynomial::from_coefficients(const std::vector<BigRational>& coeffs) {
  BigInt den = 1;
  for (const auto& c : coeffs) den = lcm(den, c.get_den());
  zpoly::ZPoly num(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    num[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
  return from_integers(std::move(num), den);
}

Polynomial Polynomial::from_integers(zpoly::ZPoly numerators, BigInt denominator) {
  if (denominator == 0) throw std::domain_error("zero polynomial denominator");
  Polynomial p;
  p.num_ = std::move(numerators);
  p.den_ = std::move(denominator);
  p.canonicalize();
  return p;
}

Polynomial Polynomial::monomial(const BigRational& c, std::size_t degree) {
  if (c == 0) return {};
  zpoly::ZPoly num(degree + 1);
  num[degree] = c.get_num();
  return from_integers(std::move(num), c.get_den());
}

Polynomial Polynomial::variable() { return monomial(1, 1); }

void Polynomial::canonicalize() {
  zpoly::trim(num_);
  if (num_.empty()) {
    den_ = 1;
    return;
  }
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  BigInt g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

int Polynomial::low_degree() const {
  for (std::size_t i = 0; i < num_.size(); ++i)
    if (num_[i] != 0) return static_cast<int>(i);
  return -1;
}

BigRational Polynomial::coeff(std::size_t i) const {
  if (i >= num_.size()) return 0;
  BigRational q(num_[i], den_);
  q.canonicalize();
  return q;
}

BigRational Polynomial::leading() const { return is_zero() ? BigRational(0) : coeff(num_.size() - 1); }

BigRational Polynomial::trailing() const {
  const int k = low_degree();
  return k < 0 ? BigRational(0) : coeff(static_cast<std::size_t>(k));
}

std::vector<BigRational> Polynomial::coefficients() const {
  std::vector<BigRational> out(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i) out[i] = coeff(i);
  return out;
}

std::pair<BigRational, zpoly::ZPoly> Polynomial::split_content() const {
  if (is_zero()) return {BigRational(0), {}};
  zpoly::ZPoly prim = zpoly::primitive_part(num_);
  // num_ = (num_[top] / prim[top]) * prim exactly.
  BigRational c(num_.back(), prim.back() * den_);
  c.canonicalize();
  return {c, std::move(prim)};
}

BigRational Polynomial::operator()(const BigRational& x) const {
  if (is_zero()) return 0;
  const BigInt scaled = homogeneous_eval(num_, x.get_num(), x.get_den());
  BigInt dpow;
  mpz_pow_ui(dpow.get_mpz_t(), x.get_den().get_mpz_t(), num_.size() - 1);
  BigRational r(scaled, dpow * den_);
  r.canonicalize();
  return r;
}

Polynomial Polynomial::derivative() const {
  if (num_.size() <= 1) return {};
  zpoly::ZPoly d(num_.size() - 1);
  for (std::size_t i = 1; i < num_.size(); ++i) d[i - 1] = num_[i] * static_cast<unsigned long>(i);
  return from_integers(std::move(d), den_);
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Polynomial r = *this;
  r *= BigRational(1) / leading();
  return r;
}

Polynomial Polynomial::reversed(std::size_t n) const {
  if (is_zero()) return {};
  if (static_cast<int>(n) < degree()) throw std::domain_error("reversal length below degree");
  zpoly::ZPoly r(n + 1);
  for (std::size_t i = 0; i < num_.size(); ++i) r[n - i] = num_[i];
  return from_integers(std::move(r), den_);
}

Polynomial Polynomial::shifted(const BigRational& c) const {
  Polynomial acc;
  const Polynomial lin = variable() + Polynomial(c);
  for (std::size_t i = num_.size(); i-- > 0;) {
    acc *= lin;
    acc += Polynomial(coeff(i));
  }
  return acc;
}

Polynomial Polynomial::divide_by_power_of_T(std::size_t k) const {
  if (k == 0 || is_zero()) return *this;
  if (low_degree() < static_cast<int>(k)) throw std::domain_error("T^k does not divide polynomial");
  zpoly::ZPoly r(num_.begin() + static_cast<std::ptrdiff_t>(k), num_.end());
  return from_integers(std::move(r), den_);
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const BigInt l = lcm(den_, o.den_);
  const BigInt fa = l / den_, fb = l / o.den_;
  num_.resize(std::max(num_.size(), o.num_.size()));
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (fa != 1) num_[i] *= fa;
    if (i < o.num_.size()) mpz_addmul(num_[i].get_mpz_t(), o.num_[i].get_mpz_t(), fb.get_mpz_t());
  }
  den_ = l;
  canonicalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  num_ = zpoly::mul(num_, o.num_);
  den_ *= o.den_;
  canonicalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const BigRational& c) {
  if (c == 0) return *this = Polynomial();
  for (auto& x : num_) x *= c.get_num();
  den_ *= c.get_den();
  canonicalize();
  return *this;
}

std::string Polynomial::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = num_.size(); i-- > 0;) {
    if (num_[i] == 0) continue;
    BigRational c = coeff(i);
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (i == 0 || c != 1) {
      os << c.get_str();
      if (i > 0) os << "*";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<BigRational> rem = a.coefficients();
  const std::vector<BigRational> bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<BigRational> q(rem.size() - db);
  const BigRational inv_lead = 1 / bc.back();
  for (std::size_t i = q.size(); i-- > 0;) {
    const BigRational f = rem[i + db] * inv_lead;
    q[i] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= f * bc[j];
  }
  rem.resize(db);
  return {Polynomial::from_coefficients(q), Polynomial::from_coefficients(rem)};
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return {};
  auto [ca, pa] = a.split_content();
  auto [cb, pb] = b.split_content();
  auto q = zpoly::divide_exact(pa, pb);
  if (!q) throw std::domain_error("inexact polynomial division");
  Polynomial r = Polynomial::from_integers(std::move(*q));
  r *= ca / cb;
  return r;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) return {};
  const auto g = zpoly::gcd(a.split_content().second, b.split_content().second);
  return Polynomial::from_integers(g).monic();
}

std::vector<BigRational> rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("rational roots of the zero polynomial");
  std::vector<BigRational> roots;
  zpoly::ZPoly a = p.split_content().second;
  std::size_t k = 0;
  while (k < a.size() && a[k] == 0) ++k;
  if (k > 0) {
    roots.emplace_back(0);
    a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(k));
  }
  if (a.size() >= 2) {
    const auto nums = positive_divisors(a.front());
    const auto dens = positive_divisors(a.back());
    for (const auto& d : dens)
      for (const auto& n : nums)
        for (int s : {1, -1}) {
          BigInt num = n * s;
          BigInt g;
          mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), d.get_mpz_t());
          if (g != 1) continue;
          if (homogeneous_eval(a, num, d) == 0) roots.emplace_back(num, d);
        }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

Irreducibility irreducibility_over_Q(const Polynomial& p) {
  if (p.degree() <= 0) return Irreducibility::reducible;
  if (p.degree() == 1) return Irreducibility::irreducible;
  if (!rational_roots(p).empty()) return Irreducibility::reducible;
  if (p.degree() <= 3) return Irreducibility::irreducible;
  if (p.degree() == 4)
    return has_quadratic_factors(p.split_content().second) ? Irreducibility::reducible
                                                           : Irreducibility::irreducible;
  return Irreducibility::unknown;
}

} // namespace h10
