#include "cnsf/detail/render.hpp"

namespace cnsf::detail {

std::string signed_coeff(const Rational& c) {
    std::string out = c < 0 ? "-" : "+";
    out += to_text(static_cast<Rational>(abs(c)));
    return out;
}

std::string latex_subscript(const std::vector<int>& parts) {
    bool compact = true;
    for (int p : parts) {
        if (p > 9) {
            compact = false;
        }
    }
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0 && !compact) {
            out += ',';
        }
        out += std::to_string(parts[i]);
    }
    return out;
}

std::string latex_terms(const std::vector<std::pair<std::string, Rational>>& rendered) {
    if (rendered.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [symbol, c] : rendered) {
        const Rational mag = static_cast<Rational>(abs(c));
        if (first) {
            if (c < 0) {
                out += '-';
            }
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1 || symbol.empty()) {
            out += to_text(mag);
        }
        out += symbol;
        first = false;
    }
    return out;
}

} // namespace cnsf::detail
