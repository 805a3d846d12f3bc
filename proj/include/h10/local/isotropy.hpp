#pragma once

#include "h10/local/form.hpp"
#include "h10/local/padic.hpp"

#include <string>

namespace h10 {

using RationalForm = DiagonalForm<BigRational>;

/// Parses "1,5,13,65" into a form; throws std::invalid_argument.
RationalForm parse_form(const std::string& text);
std::string to_string(const RationalForm& q);

BigRational discriminant(const RationalForm& q);
/// Product over i < j of (d_i, d_j)_p.
int hasse_invariant(const RationalForm& q, const PadicContext& ctx);

/// Nontrivial zero over Q_p, decided from dimension, discriminant and Hasse invariant.
bool is_isotropic_local(const RationalForm& q, const PadicContext& ctx);

/// Nontrivial zero over R: entries of both signs.
bool is_isotropic_real(const RationalForm& q);

} // namespace h10
