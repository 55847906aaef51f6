#pragma once

// The algebra NSym of noncommutative symmetric functions: sparse exact
// linear combinations over compositions in the complete homogeneous (H),
// ribbon (R), and noncommutative power sum (Psi) bases.
//
// Basis relations:
//   R_a  = sum_{b >= a} (-1)^{l(a)-l(b)} H_b      H_a = sum_{b >= a} R_b
//   Psi_n = sum_{i=0}^{n-1} (-1)^i R_{(1^i, n-i)}
//   H and Psi are multiplicative: basis_a * basis_b = basis_{a.b}.
// The forgetful projection chi: NSym -> Sym sends H_a to h_{sort(a)} and
// Psi_a to p_{sort(a)}.

#include <map>
#include <string>

#include "cnsf/combinatorics.hpp"
#include "cnsf/rational.hpp"
#include "cnsf/sym.hpp"

namespace cnsf {

// Degree bound on the solve-based basis changes (into Psi); the graded
// component of degree n has dimension 2^(n-1).
inline constexpr int kDefaultSolveCap = 10;

enum class NSymBasis { H, R, Psi };

const char* basis_name(NSymBasis b);

class NSymElement {
public:
    using TermMap = std::map<Composition, Rational, CompositionOrder>;

    explicit NSymElement(NSymBasis basis) : basis_(basis) {}

    static NSymElement zero(NSymBasis basis) { return NSymElement(basis); }
    static NSymElement unit(NSymBasis basis);
    static NSymElement basis_element(NSymBasis basis, Composition index, Rational coeff = 1);

    NSymBasis basis() const { return basis_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Composition& index) const;

    // Adds c to the coefficient at index, dropping it if it cancels.
    void add_term(const Composition& index, const Rational& c);

    bool operator==(const NSymElement&) const = default;

private:
    NSymBasis basis_;
    TermMap terms_;
};

// a + c*b; bases must match.
NSymElement combine(const NSymElement& a, const Rational& c, const NSymElement& b);

// Product. H and Psi multiply by index concatenation; R-by-R products
// route through H and convert back. Bases must match.
NSymElement multiply(const NSymElement& a, const NSymElement& b);

// Exact H-expansion of the generator Psi_n, n >= 1.
NSymElement psi_generator_in_h(int n);

// Re-expresses e in the target basis. Directions into Psi run an exact
// per-degree triangular solve and honor solve_cap; the formula-based
// directions are uncapped.
NSymElement convert(const NSymElement& e, NSymBasis target, int solve_cap = kDefaultSolveCap);

// Forgetful projection to Sym, returned in the p basis.
SymElement chi(const NSymElement& e);

// "+2*H[2] -1*H[1,1]", "0"
std::string to_text(const NSymElement& e);
std::string to_latex(const NSymElement& e);

} // namespace cnsf
