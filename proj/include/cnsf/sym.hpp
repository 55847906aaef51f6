#pragma once

// Commutative symmetric functions in the power sum (p) and complete
// homogeneous (h) bases, Stanley's chromatic symmetric function
//
//     X_G = sum_{S subset of E} (-1)^|S| p_{lambda(S)},
//
// and two independent oracles for it: the proper-coloring monomial
// expansion truncated to finitely many variables, and direct coloring
// counts.  lambda(S) lists the connected-component sizes of the spanning
// subgraph (V, S), sorted weakly decreasing.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cnsf/combinatorics.hpp"
#include "cnsf/rational.hpp"

namespace cnsf {

inline constexpr int kDefaultEdgeSubsetCap = 24;
inline constexpr long long kDefaultColoringBudget = 10'000'000;
// Largest part for which Newton-recursion basis changes are attempted.
inline constexpr int kDefaultNewtonCap = 30;

enum class SymBasis { P, H };

const char* basis_name(SymBasis b);

class SymElement {
public:
    using TermMap = std::map<Partition, Rational, PartitionOrder>;

    explicit SymElement(SymBasis basis) : basis_(basis) {}

    static SymElement zero(SymBasis basis) { return SymElement(basis); }
    static SymElement unit(SymBasis basis);
    static SymElement basis_element(SymBasis basis, Partition index, Rational coeff = 1);

    SymBasis basis() const { return basis_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Partition& index) const;

    // Adds c to the coefficient at index, dropping it if it cancels.
    void add_term(const Partition& index, const Rational& c);

    bool operator==(const SymElement&) const = default;

private:
    SymBasis basis_;
    TermMap terms_;
};

// a + c*b; bases must match.
SymElement combine(const SymElement& a, const Rational& c, const SymElement& b);

// Product in a multiplicative basis: indices merge as multisets.
SymElement multiply(const SymElement& a, const SymElement& b);

// Basis changes via the Newton recursion n h_n = sum_{i=1..n} p_i h_{n-i}.
// The cap bounds the largest part expanded.
SymElement h_to_p(const SymElement& e, int cap = kDefaultNewtonCap);
SymElement p_to_h(const SymElement& e, int cap = kDefaultNewtonCap);

class UndirectedGraph {
public:
    using Edge = std::pair<int, int>; // stored (min, max)

    UndirectedGraph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    // Canonical: normalized endpoints, lexicographically sorted.
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(Edge e) const;

    bool operator==(const UndirectedGraph&) const = default;

private:
    int n_;
    std::vector<Edge> edges_;
};

// Component-size partition of the spanning subgraph (V, s); s must be a
// subset of g's edges.
Partition lambda_of_subset(const UndirectedGraph& g, const std::vector<UndirectedGraph::Edge>& s);

// Exact signed sum over all 2^|E| edge subsets; |E| must be <= cap.
// jobs > 1 splits the subset range across that many workers.
SymElement stanley_power_sum(const UndirectedGraph& g, int cap = kDefaultEdgeSubsetCap,
                             int jobs = 1);

// Exact polynomial in x_1..x_m, sparse on exponent vectors of length m.
class MultivariatePolynomial {
public:
    using TermMap = std::map<std::vector<int>, Rational>;

    explicit MultivariatePolynomial(int variables);

    static MultivariatePolynomial constant(int variables, const Rational& c);

    int variable_count() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<int>& exponents, const Rational& c);
    Rational value_at_ones() const;

    MultivariatePolynomial operator*(const MultivariatePolynomial& other) const;
    MultivariatePolynomial& operator+=(const MultivariatePolynomial& other);

    bool operator==(const MultivariatePolynomial&) const = default;

private:
    int vars_;
    TermMap terms_;
};

// Sum over proper colorings kappa: V -> {1..colors} of prod_v x_{kappa(v)}.
// Enumerates colors^n colorings; that count must stay within budget.
MultivariatePolynomial coloring_oracle(const UndirectedGraph& g, int colors,
                                       long long budget = kDefaultColoringBudget);

// Substitute p_k -> x_1^k + ... + x_m^k and expand exactly.
MultivariatePolynomial evaluate_p_truncated(const SymElement& e, int variables);

// "+1*p[2,1] -1/2*p[3]", "0"
std::string to_text(const SymElement& e);
std::string to_latex(const SymElement& e);
// "+2*x1*x2 +1*x1^2"
std::string to_text(const MultivariatePolynomial& p);

} // namespace cnsf
