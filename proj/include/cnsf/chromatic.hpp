#pragma once

// The chromatic noncommutative symmetric function of a digraph,
//
//     X_D = sum_{S subset of E(D)} (-1)^|S| Psi_{alpha(S)},
//
// whose commutative image is Stanley's X_G for the underlying graph G; the
// inwardly directed star family with its closed-form expansion; and the
// constructive machinery for chromatic generating sets: any family of
// digraphs D_1, D_2, ... with |V(D_i)| = i and connected underlying graphs
// freely generates NSym, and every Psi generator rewrites as a polynomial
// in the X_{D_i}.

#include <map>
#include <string>
#include <vector>

#include "cnsf/digraph.hpp"
#include "cnsf/nsym.hpp"
#include "cnsf/sym.hpp"

namespace cnsf {

inline constexpr int kDefaultArcSubsetCap = 24;

// Exact Psi expansion over all 2^|E(D)| arc subsets; |E(D)| must be <= cap.
// jobs > 1 splits the subset range across that many workers.
NSymElement chromatic_nsym(const Digraph& d, int cap = kDefaultArcSubsetCap, int jobs = 1);

struct ProjectionReport {
    SymElement chi_xd; // chi(X_D) in p
    SymElement xg;     // Stanley expansion of X_G in p
    bool equal = false;
};

// Computes both sides of the projection identity chi(X_D) = X_G.  A
// mismatch is reported, not thrown.
ProjectionReport verify_projection(const Digraph& d, int cap = kDefaultArcSubsetCap,
                                   int jobs = 1);

// n vertices, n-1 arcs all pointing at vertex 0.
Digraph inward_star(int n);

// sum_{i=0}^{n} (-1)^i binom(n,i) Psi_{(1^{n-i}, i+1)}, the expansion of
// the inwardly directed star on n+1 vertices.
NSymElement star_closed_form(int n, int cap = kDefaultArcSubsetCap);

// Noncommutative polynomials in abstract generator symbols g_1, g_2, ...:
// sparse rational combinations of words of generator indices.
class GeneratorPolynomial {
public:
    using Word = std::vector<int>;

    // Graded by weighted degree (sum of indices), then lexicographic.
    struct WordOrder {
        bool operator()(const Word& a, const Word& b) const { return graded_lex_less(a, b); }
    };

    using TermMap = std::map<Word, Rational, WordOrder>;

    GeneratorPolynomial() = default;

    static GeneratorPolynomial zero() { return {}; }
    static GeneratorPolynomial unit() { return single(Word{}, 1); }
    static GeneratorPolynomial single(Word w, Rational coeff = 1);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Word& w) const;

    void add_term(const Word& w, const Rational& c);

    GeneratorPolynomial operator*(const GeneratorPolynomial& other) const; // free product
    GeneratorPolynomial& operator+=(const GeneratorPolynomial& other);
    GeneratorPolynomial& operator-=(const GeneratorPolynomial& other);
    GeneratorPolynomial& operator*=(const Rational& c);

    bool operator==(const GeneratorPolynomial&) const = default;

private:
    TermMap terms_;
};

// An ordered list D_1, ..., D_k with |V(D_i)| = i and connected underlying
// graphs; validated on construction.
class GeneratorFamily {
public:
    explicit GeneratorFamily(std::vector<Digraph> members);

    int size() const { return static_cast<int>(members_.size()); }
    const Digraph& member(int i) const; // 1-based

private:
    std::vector<Digraph> members_;
};

// Expresses a Psi-basis target as a polynomial in g_1..g_k such that
// substituting X_{D_i} for g_i recovers the target exactly.  Every part of
// every composition in the target must be <= k.
GeneratorPolynomial rewrite_in_generators(const GeneratorFamily& fam, const NSymElement& target,
                                          int cap = kDefaultArcSubsetCap);

// Replaces each g_i by X_{D_i} and expands in the Psi basis.
NSymElement substitute_generators(const GeneratorFamily& fam, const GeneratorPolynomial& p,
                                  int cap = kDefaultArcSubsetCap);

// "+1*g1*g1 -1*g2"; the empty word renders as 1.
std::string to_text(const GeneratorPolynomial& p);
std::string to_latex(const GeneratorPolynomial& p);

} // namespace cnsf
