#include "cnsf/nsym.hpp"

#include <algorithm>

#include "cnsf/detail/render.hpp"

namespace cnsf {

const char* basis_name(NSymBasis b) {
    switch (b) {
    case NSymBasis::H:
        return "H";
    case NSymBasis::R:
        return "R";
    default:
        return "Psi";
    }
}

NSymElement NSymElement::unit(NSymBasis basis) {
    NSymElement e(basis);
    e.add_term(Composition(), 1);
    return e;
}

NSymElement NSymElement::basis_element(NSymBasis basis, Composition index, Rational coeff) {
    NSymElement e(basis);
    e.add_term(index, coeff);
    return e;
}

Rational NSymElement::coefficient(const Composition& index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? Rational(0) : it->second;
}

void NSymElement::add_term(const Composition& index, const Rational& c) {
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.emplace(index, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

NSymElement combine(const NSymElement& a, const Rational& c, const NSymElement& b) {
    if (a.basis() != b.basis()) {
        throw InputError("cannot combine NSym elements in different bases");
    }
    NSymElement out = a;
    for (const auto& [index, coeff] : b.terms()) {
        out.add_term(index, c * coeff);
    }
    return out;
}

namespace {

NSymElement concat_product(const NSymElement& a, const NSymElement& b) {
    NSymElement out(a.basis());
    for (const auto& [ia, ca] : a.terms()) {
        for (const auto& [ib, cb] : b.terms()) {
            out.add_term(Composition::concat(ia, ib), ca * cb);
        }
    }
    return out;
}

// R_a expanded in H: signed sum over the coarsenings of a.
NSymElement ribbon_in_h(const Composition& a) {
    NSymElement out(NSymBasis::H);
    for (const Composition& b : coarsenings(a)) {
        const int sign = ((a.length() - b.length()) % 2 == 0) ? 1 : -1;
        out.add_term(b, sign);
    }
    return out;
}

// H_a expanded in R: plain sum over the coarsenings of a.
NSymElement h_in_ribbon(const Composition& a) {
    NSymElement out(NSymBasis::R);
    for (const Composition& b : coarsenings(a)) {
        out.add_term(b, 1);
    }
    return out;
}

NSymElement psi_in_h(const Composition& a) {
    NSymElement out = NSymElement::unit(NSymBasis::H);
    for (int part : a.parts()) {
        out = concat_product(out, psi_generator_in_h(part));
    }
    return out;
}

template <typename Expand>
NSymElement expand_terms(const NSymElement& e, NSymBasis target, Expand expand) {
    NSymElement out(target);
    for (const auto& [index, c] : e.terms()) {
        out = combine(out, c, expand(index));
    }
    return out;
}

// Orders the elimination in the triangular solve: any index is touched
// only by the elimination of strictly shorter indices.
struct LengthLexOrder {
    bool operator()(const Composition& a, const Composition& b) const {
        if (a.length() != b.length()) {
            return a.length() < b.length();
        }
        return std::lexicographical_compare(a.parts().begin(), a.parts().end(),
                                            b.parts().begin(), b.parts().end());
    }
};

// Solves sum_d out_d Psi_d = e (an H element) exactly.  The Psi-to-H
// change of basis is triangular with respect to refinement: Psi_g expands
// as (prod g_i) H_g plus terms indexed by strict refinements of g, which
// are strictly longer.  Eliminating shortest-first therefore never
// revisits an index.
NSymElement h_to_psi(const NSymElement& e, int solve_cap) {
    std::map<Composition, Rational, LengthLexOrder> residual;
    for (const auto& [index, c] : e.terms()) {
        if (index.degree() > solve_cap) {
            throw InputError("basis-change solve cap exceeded (degree " +
                             std::to_string(index.degree()) + " > cap " +
                             std::to_string(solve_cap) + ")");
        }
        residual.emplace(index, c);
    }
    NSymElement out(NSymBasis::Psi);
    while (!residual.empty()) {
        const auto [gamma, c] = *residual.begin();
        residual.erase(residual.begin());
        if (c == 0) {
            continue;
        }
        Rational lead = 1;
        for (int part : gamma.parts()) {
            lead *= part;
        }
        const Rational d = c / lead;
        out.add_term(gamma, d);
        for (const auto& [beta, cc] : psi_in_h(gamma).terms()) {
            auto [it, inserted] = residual.emplace(beta, -d * cc);
            if (!inserted) {
                it->second -= d * cc;
                if (it->second == 0) {
                    residual.erase(it);
                }
            }
        }
    }
    return out;
}

} // namespace

NSymElement multiply(const NSymElement& a, const NSymElement& b) {
    if (a.basis() != b.basis()) {
        throw InputError("cannot multiply NSym elements in different bases");
    }
    if (a.basis() == NSymBasis::R) {
        return convert(concat_product(convert(a, NSymBasis::H), convert(b, NSymBasis::H)),
                       NSymBasis::R);
    }
    return concat_product(a, b);
}

NSymElement psi_generator_in_h(int n) {
    if (n < 1) {
        throw InputError("Psi generators are indexed by positive integers");
    }
    // Psi_n = sum_{i=0}^{n-1} (-1)^i R_{(1^i, n-i)}, each ribbon expanded in H.
    NSymElement out(NSymBasis::H);
    for (int i = 0; i < n; ++i) {
        std::vector<int> parts(i, 1);
        parts.push_back(n - i);
        const int sign = (i % 2 == 0) ? 1 : -1;
        out = combine(out, sign, ribbon_in_h(Composition(std::move(parts))));
    }
    return out;
}

NSymElement convert(const NSymElement& e, NSymBasis target, int solve_cap) {
    if (e.basis() == target) {
        return e;
    }
    switch (e.basis()) {
    case NSymBasis::H:
        if (target == NSymBasis::R) {
            return expand_terms(e, target, h_in_ribbon);
        }
        return h_to_psi(e, solve_cap);
    case NSymBasis::R:
        if (target == NSymBasis::H) {
            return expand_terms(e, target, ribbon_in_h);
        }
        return h_to_psi(convert(e, NSymBasis::H), solve_cap);
    default: // Psi
        if (target == NSymBasis::H) {
            return expand_terms(e, target, psi_in_h);
        }
        return convert(convert(e, NSymBasis::H), NSymBasis::R);
    }
}

SymElement chi(const NSymElement& e) {
    switch (e.basis()) {
    case NSymBasis::Psi: {
        SymElement out(SymBasis::P);
        for (const auto& [index, c] : e.terms()) {
            out.add_term(sort_to_partition(index), c);
        }
        return out;
    }
    case NSymBasis::H: {
        SymElement h(SymBasis::H);
        int widest = 0;
        for (const auto& [index, c] : e.terms()) {
            h.add_term(sort_to_partition(index), c);
            for (int part : index.parts()) {
                widest = std::max(widest, part);
            }
        }
        // chi itself is total; size the Newton cap to the input.
        return h_to_p(h, std::max(widest, kDefaultNewtonCap));
    }
    default:
        return chi(convert(e, NSymBasis::H));
    }
}

std::string to_text(const NSymElement& e) {
    if (e.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto& [index, c] : e.terms()) {
        if (!out.empty()) {
            out += ' ';
        }
        out += detail::signed_coeff(c);
        out += '*';
        out += basis_name(e.basis());
        out += to_text(index);
    }
    return out;
}

std::string to_latex(const NSymElement& e) {
    std::vector<std::pair<std::string, Rational>> rendered;
    std::string symbol_base = e.basis() == NSymBasis::Psi ? "\\Psi" : basis_name(e.basis());
    for (const auto& [index, c] : e.terms()) {
        std::string symbol;
        if (!index.empty()) {
            symbol = symbol_base + "_{" + detail::latex_subscript(index.parts()) + "}";
        }
        rendered.emplace_back(symbol, c);
    }
    return detail::latex_terms(rendered);
}

} // namespace cnsf
