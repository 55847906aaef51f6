#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cnsf/rational.hpp"

namespace cnsf::detail {

// "+3", "-1/2": sign always present, magnitude always printed.
std::string signed_coeff(const Rational& c);

// Subscript in the compact style H_{211}; commas only if some part needs
// more than one digit.
std::string latex_subscript(const std::vector<int>& parts);

// Joins (symbol, coefficient) pairs as a LaTeX sum; unit coefficients are
// suppressed unless the symbol is empty (a constant term).
std::string latex_terms(const std::vector<std::pair<std::string, Rational>>& rendered);

} // namespace cnsf::detail
