#include "h10/core/bigrational.hpp"

#include <stdexcept>

namespace h10 {

BigRational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    const auto b = t.find_first_not_of(" \t");
    const auto e = t.find_last_not_of(" \t");
    t = (b == std::string::npos) ? std::string() : t.substr(b, e - b + 1);
  };
  trim(s);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (s.front() == '+') s.erase(0, 1);

  std::string num = s, den = "1";
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
    trim(num);
    trim(den);
  }
  auto valid = [](const std::string& t) {
    std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (!valid(num) || !valid(den))
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");

  BigInt n(num, 10), d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  BigRational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const BigRational& q) {
  BigRational c(q);
  c.canonicalize();
  return c.get_str(10);
}
std::string to_string(const BigInt& z) { return z.get_str(10); }

BigInt height(const BigRational& q) {
  BigInt n = abs(q.get_num());
  return n > q.get_den() ? n : BigInt(q.get_den());
}

} // namespace h10
