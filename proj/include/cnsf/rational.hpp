#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cnsf {

// Exact arbitrary-precision arithmetic. cpp_rational keeps values in
// canonical form: lowest terms, positive denominator.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// num/den as a normalized rational; den must be nonzero.
Rational make_rational(const BigInt& num, const BigInt& den);

bool is_integer(const Rational& r);

// "3", "-2", "5/2"
std::string to_text(const Rational& r);

} // namespace cnsf
