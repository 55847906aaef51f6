#include "cnsf/sym.hpp"

#include <algorithm>

#include "cnsf/detail/render.hpp"
#include "cnsf/detail/subset_sweep.hpp"
#include "cnsf/detail/union_find.hpp"

namespace cnsf {

const char* basis_name(SymBasis b) {
    return b == SymBasis::P ? "p" : "h";
}

SymElement SymElement::unit(SymBasis basis) {
    SymElement e(basis);
    e.add_term(Partition(), 1);
    return e;
}

SymElement SymElement::basis_element(SymBasis basis, Partition index, Rational coeff) {
    SymElement e(basis);
    e.add_term(index, coeff);
    return e;
}

Rational SymElement::coefficient(const Partition& index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SymElement::add_term(const Partition& index, const Rational& c) {
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

SymElement combine(const SymElement& a, const Rational& c, const SymElement& b) {
    if (a.basis() != b.basis()) {
        throw InputError("cannot combine Sym elements in different bases");
    }
    SymElement out = a;
    for (const auto& [index, coeff] : b.terms()) {
        out.add_term(index, c * coeff);
    }
    return out;
}

namespace {

Partition merge_indices(const Partition& a, const Partition& b) {
    std::vector<int> parts;
    parts.reserve(a.parts().size() + b.parts().size());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(parts), std::greater<int>());
    return Partition(std::move(parts));
}

} // namespace

SymElement multiply(const SymElement& a, const SymElement& b) {
    if (a.basis() != b.basis()) {
        throw InputError("cannot multiply Sym elements in different bases");
    }
    SymElement out(a.basis());
    for (const auto& [ia, ca] : a.terms()) {
        for (const auto& [ib, cb] : b.terms()) {
            out.add_term(merge_indices(ia, ib), ca * cb);
        }
    }
    return out;
}

namespace {

// p-expansions of h_1..h_n from n h_n = sum_{i=1..n} p_i h_{n-i}.
std::vector<SymElement> h_generators_in_p(int n) {
    std::vector<SymElement> h(n + 1, SymElement::zero(SymBasis::P));
    h[0] = SymElement::unit(SymBasis::P);
    for (int k = 1; k <= n; ++k) {
        SymElement acc = SymElement::zero(SymBasis::P);
        for (int i = 1; i <= k; ++i) {
            const SymElement pi = SymElement::basis_element(SymBasis::P, Partition({i}));
            acc = combine(acc, 1, multiply(pi, h[k - i]));
        }
        for (const auto& [index, c] : acc.terms()) {
            h[k].add_term(index, c / k);
        }
    }
    return h;
}

// h-expansions of p_1..p_n from the same recursion solved for p_n.
std::vector<SymElement> p_generators_in_h(int n) {
    std::vector<SymElement> p(n + 1, SymElement::zero(SymBasis::H));
    for (int k = 1; k <= n; ++k) {
        SymElement acc =
            SymElement::basis_element(SymBasis::H, Partition({k}), Rational(k));
        for (int i = 1; i < k; ++i) {
            const SymElement hi = SymElement::basis_element(SymBasis::H, Partition({k - i}));
            acc = combine(acc, -1, multiply(p[i], hi));
        }
        p[k] = acc;
    }
    return p;
}

int max_part(const SymElement& e) {
    int m = 0;
    for (const auto& [index, c] : e.terms()) {
        if (!index.parts().empty()) {
            m = std::max(m, index.parts().front());
        }
    }
    return m;
}

SymElement change_basis(const SymElement& e, SymBasis from, SymBasis to,
                        const std::vector<SymElement>& generators) {
    if (e.basis() != from) {
        throw InputError("element is not in the expected source basis");
    }
    SymElement out = SymElement::zero(to);
    for (const auto& [index, c] : e.terms()) {
        SymElement term = SymElement::unit(to);
        for (int part : index.parts()) {
            term = multiply(term, generators[part]);
        }
        out = combine(out, c, term);
    }
    return out;
}

} // namespace

SymElement h_to_p(const SymElement& e, int cap) {
    const int n = max_part(e);
    if (n > cap) {
        throw InputError("h-to-p cap exceeded (part " + std::to_string(n) + " > cap " +
                         std::to_string(cap) + ")");
    }
    return change_basis(e, SymBasis::H, SymBasis::P, h_generators_in_p(n));
}

SymElement p_to_h(const SymElement& e, int cap) {
    const int n = max_part(e);
    if (n > cap) {
        throw InputError("p-to-h cap exceeded (part " + std::to_string(n) + " > cap " +
                         std::to_string(cap) + ")");
    }
    return change_basis(e, SymBasis::P, SymBasis::H, p_generators_in_h(n));
}

UndirectedGraph::UndirectedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) {
        throw InputError("vertex count must be nonnegative");
    }
    for (auto& [u, v] : edges_) {
        if (u == v) {
            throw InputError("loops are not allowed");
        }
        if (u < 0 || v < 0 || u >= n_ || v >= n_) {
            throw InputError("edge endpoint out of range");
        }
        if (u > v) {
            std::swap(u, v);
        }
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw InputError("duplicate edge");
    }
}

bool UndirectedGraph::has_edge(Edge e) const {
    if (e.first > e.second) {
        std::swap(e.first, e.second);
    }
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

namespace {

Partition component_partition(int n, const std::vector<UndirectedGraph::Edge>& edges) {
    detail::UnionFind uf(n);
    for (const auto& [u, v] : edges) {
        uf.unite(u, v);
    }
    std::vector<int> size(n, 0);
    for (int v = 0; v < n; ++v) {
        ++size[uf.find(v)];
    }
    std::vector<int> parts;
    for (int v = 0; v < n; ++v) {
        if (size[v] > 0) {
            parts.push_back(size[v]);
        }
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

} // namespace

Partition lambda_of_subset(const UndirectedGraph& g, const std::vector<UndirectedGraph::Edge>& s) {
    std::vector<UndirectedGraph::Edge> seen;
    seen.reserve(s.size());
    for (auto e : s) {
        if (!g.has_edge(e)) {
            throw InputError("edge subset contains an edge not in the graph");
        }
        if (e.first > e.second) {
            std::swap(e.first, e.second);
        }
        seen.push_back(e);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
        throw InputError("edge subset contains a duplicate edge");
    }
    return component_partition(g.vertex_count(), seen);
}

SymElement stanley_power_sum(const UndirectedGraph& g, int cap, int jobs) {
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());
    if (m > cap) {
        throw InputError("edge subset cap exceeded (|E|=" + std::to_string(m) + " > cap " +
                         std::to_string(cap) + ")");
    }
    auto per_mask = [&g, &edges, picked = std::vector<UndirectedGraph::Edge>{}](
                        SymElement& acc, std::uint64_t mask) mutable {
        picked.clear();
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if ((mask >> i) & 1u) {
                picked.push_back(edges[i]);
            }
        }
        const int sign = (picked.size() % 2 == 0) ? 1 : -1;
        acc.add_term(component_partition(g.vertex_count(), picked), sign);
    };
    auto merge = [](SymElement& acc, const SymElement& part) { acc = combine(acc, 1, part); };
    return detail::sweep_masks(m, jobs, SymElement::zero(SymBasis::P), per_mask, merge);
}

MultivariatePolynomial::MultivariatePolynomial(int variables) : vars_(variables) {
    if (vars_ < 0) {
        throw InputError("variable count must be nonnegative");
    }
}

MultivariatePolynomial MultivariatePolynomial::constant(int variables, const Rational& c) {
    MultivariatePolynomial p(variables);
    p.add_term(std::vector<int>(variables, 0), c);
    return p;
}

void MultivariatePolynomial::add_term(const std::vector<int>& exponents, const Rational& c) {
    if (static_cast<int>(exponents.size()) != vars_) {
        throw InputError("exponent vector length does not match variable count");
    }
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.emplace(exponents, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

Rational MultivariatePolynomial::value_at_ones() const {
    Rational total = 0;
    for (const auto& [mono, c] : terms_) {
        total += c;
    }
    return total;
}

MultivariatePolynomial MultivariatePolynomial::operator*(const MultivariatePolynomial& other) const {
    if (vars_ != other.vars_) {
        throw InputError("cannot multiply polynomials in different variable counts");
    }
    MultivariatePolynomial out(vars_);
    std::vector<int> mono(vars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            for (int i = 0; i < vars_; ++i) {
                mono[i] = ma[i] + mb[i];
            }
            out.add_term(mono, ca * cb);
        }
    }
    return out;
}

MultivariatePolynomial& MultivariatePolynomial::operator+=(const MultivariatePolynomial& other) {
    if (vars_ != other.vars_) {
        throw InputError("cannot add polynomials in different variable counts");
    }
    for (const auto& [mono, c] : other.terms_) {
        add_term(mono, c);
    }
    return *this;
}

MultivariatePolynomial coloring_oracle(const UndirectedGraph& g, int colors, long long budget) {
    if (colors < 1) {
        throw InputError("color count must be positive");
    }
    const int n = g.vertex_count();
    long long total = 1;
    for (int v = 0; v < n; ++v) {
        if (total > budget / colors) {
            throw InputError("coloring budget exceeded");
        }
        total *= colors;
    }

    MultivariatePolynomial out(colors);
    std::vector<int> coloring(n, 0); // odometer over {0..colors-1}^n
    std::vector<int> counts(colors);
    const auto& edges = g.edges();
    while (true) {
        bool proper = true;
        for (const auto& [u, v] : edges) {
            if (coloring[u] == coloring[v]) {
                proper = false;
                break;
            }
        }
        if (proper) {
            std::fill(counts.begin(), counts.end(), 0);
            for (int v = 0; v < n; ++v) {
                ++counts[coloring[v]];
            }
            out.add_term(counts, 1);
        }
        int pos = n - 1;
        while (pos >= 0 && coloring[pos] == colors - 1) {
            coloring[pos] = 0;
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++coloring[pos];
    }
    return out;
}

MultivariatePolynomial evaluate_p_truncated(const SymElement& e, int variables) {
    if (e.basis() != SymBasis::P) {
        throw InputError("evaluation requires a p-basis element");
    }
    if (variables < 1) {
        throw InputError("variable count must be positive");
    }
    // x_1^k + ... + x_m^k for each needed k, built once.
    std::vector<MultivariatePolynomial> power_sums(max_part(e) + 1,
                                                   MultivariatePolynomial(variables));
    for (int k = 1; k <= max_part(e); ++k) {
        std::vector<int> mono(variables, 0);
        for (int i = 0; i < variables; ++i) {
            mono[i] = k;
            power_sums[k].add_term(mono, 1);
            mono[i] = 0;
        }
    }
    MultivariatePolynomial out(variables);
    for (const auto& [index, c] : e.terms()) {
        MultivariatePolynomial term = MultivariatePolynomial::constant(variables, c);
        for (int part : index.parts()) {
            term = term * power_sums[part];
        }
        out += term;
    }
    return out;
}

std::string to_text(const SymElement& e) {
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

std::string to_latex(const SymElement& e) {
    std::vector<std::pair<std::string, Rational>> rendered;
    for (const auto& [index, c] : e.terms()) {
        std::string symbol;
        if (!index.empty()) {
            symbol = std::string(basis_name(e.basis())) + "_{" +
                     detail::latex_subscript(index.parts()) + "}";
        }
        rendered.emplace_back(symbol, c);
    }
    return detail::latex_terms(rendered);
}

std::string to_text(const MultivariatePolynomial& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto& [mono, c] : p.terms()) {
        if (!out.empty()) {
            out += ' ';
        }
        out += detail::signed_coeff(c);
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (mono[i] == 0) {
                continue;
            }
            out += "*x" + std::to_string(i + 1);
            if (mono[i] > 1) {
                out += "^" + std::to_string(mono[i]);
            }
        }
    }
    return out;
}

} // namespace cnsf
