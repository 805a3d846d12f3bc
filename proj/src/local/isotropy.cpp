#include "h10/local/isotropy.hpp"

#include <sstream>

namespace h10 {

RationalForm parse_form(const std::string& text) {
  std::vector<BigRational> entries;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) entries.push_back(parse_rational(item));
  return RationalForm(std::move(entries));
}

std::string to_string(const RationalForm& q) {
  std::string s = "<";
  for (std::size_t i = 0; i < q.dim(); ++i) {
    if (i) s += ", ";
    s += to_string(q[i]);
  }
  return s + ">";
}

BigRational discriminant(const RationalForm& q) {
  BigRational d = 1;
  for (const auto& e : q.entries()) d *= e;
  return d;
}

int hasse_invariant(const RationalForm& q, const PadicContext& ctx) {
  int s = 1;
  for (std::size_t i = 0; i < q.dim(); ++i)
    for (std::size_t j = i + 1; j < q.dim(); ++j) s *= hilbert_symbol(q[i], q[j], ctx);
  return s;
}

bool is_isotropic_local(const RationalForm& q, const PadicContext& ctx) {
  switch (q.dim()) {
    case 0:
    case 1: return false;
    case 2: return is_square_Qp(-q[0] * q[1], ctx);
    case 3:
      // <a1,a2,a3> ~ -a3 <-a1/a3, -a2/a3, -1>: isotropic iff z^2 = (-a1 a3) x^2 + (-a2 a3) y^2 is solvable.
      return hilbert_symbol(-q[0] * q[2], -q[1] * q[2], ctx) == 1;
    case 4:
      // Anisotropic iff the discriminant is a square and the Hasse invariant
      // differs from (-1,-1)_p, which is +1 for odd p.
      if (!is_square_Qp(discriminant(q), ctx)) return true;
      return hasse_invariant(q, ctx) == hilbert_symbol(-1, -1, ctx);
    default: return true;
  }
}

bool is_isotropic_real(const RationalForm& q) {
  bool pos = false, neg = false;
  for (const auto& e : q.entries()) (e > 0 ? pos : neg) = true;
  return pos && neg;
}

} // namespace h10
