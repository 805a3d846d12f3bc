#include "h10/core/json.hpp"

#include <stdexcept>

namespace h10::json {

Json encode(const BigRational& q) { return to_string(q); }

Json encode(const Polynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) arr.push_back(encode(c));
  return arr;
}

Json encode(const RationalFunction& f) { return Json{{"num", encode(f.num())}, {"den", encode(f.den())}}; }

Json encode(const LaurentSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coefficients) coeffs.push_back(encode(c));
  return Json{{"place", s.place.to_string()},
              {"lowest_exponent", s.lowest_exponent},
              {"precision", s.precision},
              {"coefficients", coeffs}};
}

BigRational decode_rational(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return BigRational(j.get<long>());
  throw std::invalid_argument("expected a rational string, got " + j.dump());
}

Polynomial decode_polynomial(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a coefficient array, got " + j.dump());
  std::vector<BigRational> c;
  c.reserve(j.size());
  for (const auto& e : j) c.push_back(decode_rational(e));
  return Polynomial::from_coefficients(c);
}

RationalFunction decode_ratfunc(const Json& j) {
  if (!j.is_object() || !j.contains("num"))
    throw std::invalid_argument("expected {\"num\": [...], \"den\": [...]}");
  const Polynomial den = j.contains("den") ? decode_polynomial(j.at("den")) : Polynomial(1);
  return RationalFunction(decode_polynomial(j.at("num")), den);
}

} // namespace h10::json
