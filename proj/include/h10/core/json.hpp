#pragma once

// JSON encodings: rationals as "n" or "n/d" strings, polynomials as arrays of
// coefficient strings by ascending degree, rational functions as {"num", "den"}.

#include "h10/core/place.hpp"
#include "h10/core/ratfunc.hpp"

#include <json.hpp>

namespace h10::json {

using Json = nlohmann::ordered_json;

Json encode(const BigRational& q);
Json encode(const Polynomial& p);
Json encode(const RationalFunction& f);
Json encode(const LaurentSeries& s);

/// Throws std::invalid_argument on schema violations.
BigRational decode_rational(const Json& j);
Polynomial decode_polynomial(const Json& j);
RationalFunction decode_ratfunc(const Json& j);

} // namespace h10::json
