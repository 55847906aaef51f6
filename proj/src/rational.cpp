#include "cnsf/rational.hpp"

#include "cnsf/errors.hpp"

namespace cnsf {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw InputError("rational with zero denominator");
    }
    return Rational(num) / Rational(den);
}

bool is_integer(const Rational& r) {
    return denominator(r) == 1;
}

std::string to_text(const Rational& r) {
    if (is_integer(r)) {
        return numerator(r).str();
    }
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace cnsf
