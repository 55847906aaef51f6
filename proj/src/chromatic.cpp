#include "cnsf/chromatic.hpp"

#include <algorithm>

#include "cnsf/detail/render.hpp"
#include "cnsf/detail/subset_sweep.hpp"
#include "cnsf/detail/union_find.hpp"

namespace cnsf {

NSymElement chromatic_nsym(const Digraph& d, int cap, int jobs) {
    const auto& arcs = d.arcs();
    const int m = static_cast<int>(arcs.size());
    if (m > cap) {
        throw InputError("arc subset cap exceeded (|E|=" + std::to_string(m) + " > cap " +
                         std::to_string(cap) + ")");
    }
    auto per_mask = [&d, &arcs, picked = std::vector<Arc>{}](NSymElement& acc,
                                                             std::uint64_t mask) mutable {
        picked.clear();
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            if ((mask >> i) & 1u) {
                picked.push_back(arcs[i]);
            }
        }
        const int sign = (picked.size() % 2 == 0) ? 1 : -1;
        acc.add_term(detail::alpha_unchecked(d, picked), sign);
    };
    auto merge = [](NSymElement& acc, const NSymElement& part) { acc = combine(acc, 1, part); };
    return detail::sweep_masks(m, jobs, NSymElement::zero(NSymBasis::Psi), per_mask, merge);
}

ProjectionReport verify_projection(const Digraph& d, int cap, int jobs) {
    ProjectionReport report{chi(chromatic_nsym(d, cap, jobs)),
                            stanley_power_sum(underlying_graph(d), cap, jobs), false};
    report.equal = report.chi_xd == report.xg;
    return report;
}

Digraph inward_star(int n) {
    if (n < 1) {
        throw InputError("star order must be positive");
    }
    std::vector<Arc> arcs;
    arcs.reserve(n - 1);
    for (int v = 1; v < n; ++v) {
        arcs.emplace_back(v, 0);
    }
    return Digraph(n, std::move(arcs));
}

NSymElement star_closed_form(int n, int cap) {
    if (n < 0) {
        throw InputError("star exponent must be nonnegative");
    }
    if (n > cap) {
        throw InputError("star exponent cap exceeded (n=" + std::to_string(n) + " > cap " +
                         std::to_string(cap) + ")");
    }
    NSymElement out(NSymBasis::Psi);
    BigInt binom = 1; // binom(n, i), updated incrementally
    for (int i = 0; i <= n; ++i) {
        std::vector<int> parts(n - i, 1);
        parts.push_back(i + 1);
        const Rational sign = (i % 2 == 0) ? 1 : -1;
        out.add_term(Composition(std::move(parts)), sign * Rational(binom));
        binom = binom * (n - i) / (i + 1);
    }
    return out;
}

GeneratorPolynomial GeneratorPolynomial::single(Word w, Rational coeff) {
    GeneratorPolynomial p;
    p.add_term(w, coeff);
    return p;
}

Rational GeneratorPolynomial::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GeneratorPolynomial::add_term(const Word& w, const Rational& c) {
    for (int letter : w) {
        if (letter < 1) {
            throw InputError("generator indices must be positive");
        }
    }
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

GeneratorPolynomial GeneratorPolynomial::operator*(const GeneratorPolynomial& other) const {
    GeneratorPolynomial out;
    for (const auto& [wa, ca] : terms_) {
        for (const auto& [wb, cb] : other.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, ca * cb);
        }
    }
    return out;
}

GeneratorPolynomial& GeneratorPolynomial::operator+=(const GeneratorPolynomial& other) {
    for (const auto& [w, c] : other.terms_) {
        add_term(w, c);
    }
    return *this;
}

GeneratorPolynomial& GeneratorPolynomial::operator-=(const GeneratorPolynomial& other) {
    for (const auto& [w, c] : other.terms_) {
        add_term(w, -c);
    }
    return *this;
}

GeneratorPolynomial& GeneratorPolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_) {
        coeff *= c;
    }
    return *this;
}

namespace {

bool underlying_connected(const Digraph& d) {
    detail::UnionFind uf(d.vertex_count());
    int components = d.vertex_count();
    for (const auto& [u, v] : d.arcs()) {
        if (uf.unite(u, v)) {
            --components;
        }
    }
    return components <= 1;
}

} // namespace

GeneratorFamily::GeneratorFamily(std::vector<Digraph> members) : members_(std::move(members)) {
    for (std::size_t i = 0; i < members_.size(); ++i) {
        const int expected = static_cast<int>(i) + 1;
        if (members_[i].vertex_count() != expected) {
            throw InputError("family member " + std::to_string(expected) + " must have " +
                             std::to_string(expected) + " vertices");
        }
        if (!underlying_connected(members_[i])) {
            throw InputError("family member " + std::to_string(expected) +
                             " must have a connected underlying graph");
        }
    }
}

const Digraph& GeneratorFamily::member(int i) const {
    if (i < 1 || i > size()) {
        throw InputError("generator index out of range");
    }
    return members_[i - 1];
}

namespace {

// Rewrites of Psi_(1), ..., Psi_(k) as generator polynomials, built by the
// triangular recursion: X_{D_j} = c_j Psi_(j) + terms whose parts are all
// below j, so Psi_(j) = (g_j - those terms, rewritten) / c_j.
class PsiRewriter {
public:
    PsiRewriter(const GeneratorFamily& fam, int cap) : fam_(fam), cap_(cap) {}

    const GeneratorPolynomial& generator(int j) {
        while (static_cast<int>(memo_.size()) < j) {
            memo_.push_back(build(static_cast<int>(memo_.size()) + 1));
        }
        return memo_[j - 1];
    }

    GeneratorPolynomial composite(const Composition& index) {
        GeneratorPolynomial out = GeneratorPolynomial::unit();
        for (int part : index.parts()) {
            out = out * generator(part);
        }
        return out;
    }

private:
    GeneratorPolynomial build(int j) {
        const NSymElement expansion = chromatic_nsym(fam_.member(j), cap_);
        const Composition pure({j});
        const Rational lead = expansion.coefficient(pure);
        if (lead == 0) {
            throw IntegrityError("vanishing Psi_(" + std::to_string(j) +
                                 ") coefficient in a connected family member");
        }
        GeneratorPolynomial out = GeneratorPolynomial::single({j});
        for (const auto& [index, c] : expansion.terms()) {
            if (index == pure) {
                continue;
            }
            // All parts here are < j, so their rewrites are already built.
            GeneratorPolynomial tail = composite(index);
            tail *= c;
            out -= tail;
        }
        out *= Rational(1) / lead;
        return out;
    }

    const GeneratorFamily& fam_;
    int cap_;
    std::vector<GeneratorPolynomial> memo_;
};

} // namespace

GeneratorPolynomial rewrite_in_generators(const GeneratorFamily& fam, const NSymElement& target,
                                          int cap) {
    if (target.basis() != NSymBasis::Psi) {
        throw InputError("rewrite target must be in the Psi basis");
    }
    for (const auto& [index, c] : target.terms()) {
        for (int part : index.parts()) {
            if (part > fam.size()) {
                throw InputError("target part " + std::to_string(part) +
                                 " exceeds the family length " + std::to_string(fam.size()));
            }
        }
    }
    PsiRewriter rewriter(fam, cap);
    GeneratorPolynomial out;
    for (const auto& [index, c] : target.terms()) {
        GeneratorPolynomial term = rewriter.composite(index);
        term *= c;
        out += term;
    }
    return out;
}

NSymElement substitute_generators(const GeneratorFamily& fam, const GeneratorPolynomial& p,
                                  int cap) {
    std::vector<NSymElement> expansions(fam.size() + 1, NSymElement::zero(NSymBasis::Psi));
    std::vector<char> computed(fam.size() + 1, 0);
    NSymElement out(NSymBasis::Psi);
    for (const auto& [word, c] : p.terms()) {
        NSymElement term = NSymElement::unit(NSymBasis::Psi);
        for (int letter : word) {
            if (letter > fam.size()) {
                throw InputError("generator index " + std::to_string(letter) +
                                 " exceeds the family length " + std::to_string(fam.size()));
            }
            if (!computed[letter]) {
                expansions[letter] = chromatic_nsym(fam.member(letter), cap);
                computed[letter] = 1;
            }
            term = multiply(term, expansions[letter]);
        }
        out = combine(out, c, term);
    }
    return out;
}

std::string to_text(const GeneratorPolynomial& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto& [word, c] : p.terms()) {
        if (!out.empty()) {
            out += ' ';
        }
        out += detail::signed_coeff(c);
        if (word.empty()) {
            out += "*1";
        } else {
            for (int letter : word) {
                out += "*g" + std::to_string(letter);
            }
        }
    }
    return out;
}

std::string to_latex(const GeneratorPolynomial& p) {
    std::vector<std::pair<std::string, Rational>> rendered;
    for (const auto& [word, c] : p.terms()) {
        std::string symbol;
        for (int letter : word) {
            symbol += "g_{" + std::to_string(letter) + "}";
        }
        rendered.emplace_back(symbol, c);
    }
    return detail::latex_terms(rendered);
}

} // namespace cnsf
