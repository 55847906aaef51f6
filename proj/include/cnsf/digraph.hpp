#pragma once

// Directed graphs and the statistics that order component tuples: the total
// degree of a vertex subset (outdegrees minus indegrees, taken in the whole
// digraph), the component tuple of an arc subset, and the composition
// alpha(S) listing component sizes with the components ranked by total
// degree, then size, then vertex word, all descending.

#include <string>
#include <utility>
#include <vector>

#include "cnsf/combinatorics.hpp"
#include "cnsf/sym.hpp"

namespace cnsf {

using Arc = std::pair<int, int>; // (tail, head)

class Digraph {
public:
    // Rejects loops, duplicate arcs, anti-parallel pairs {(u,v),(v,u)},
    // and endpoints outside [0, n).
    Digraph(int n, std::vector<Arc> arcs);

    int vertex_count() const { return n_; }
    // Canonical: lexicographically sorted.
    const std::vector<Arc>& arcs() const { return arcs_; }
    bool has_arc(Arc a) const;
    int outdegree(int v) const;
    int indegree(int v) const;

    bool operator==(const Digraph&) const = default;

private:
    int n_;
    std::vector<Arc> arcs_;
    std::vector<int> outdeg_;
    std::vector<int> indeg_;
};

// Connected components of the spanning subgraph induced by an arc subset,
// sizes weakly decreasing, equal sizes broken by reverse lexicographic
// comparison of the ascending-vertex words.
class ComponentTuple {
public:
    explicit ComponentTuple(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {}

    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    bool operator==(const ComponentTuple&) const = default;

private:
    std::vector<std::vector<int>> blocks_;
};

// Same vertices; one edge {u,v} per arc (u,v).
UndirectedGraph underlying_graph(const Digraph& d);

// Sum of outdegrees minus sum of indegrees over the subset, degrees taken
// in d.  Vertices must be distinct and in range.
int total_degree(const Digraph& d, const std::vector<int>& vertex_subset);

// s must be a set of arcs of d.
ComponentTuple component_tuple(const Digraph& d, const std::vector<Arc>& s);

// The composition of |V| listing component sizes of the subset's spanning
// subgraph, ordered by total degree, then size, then vertex word, all
// strictly descending; a rearrangement of lambda of the underlying subset.
Composition alpha(const Digraph& d, const std::vector<Arc>& s);

// Arcs mapped entrywise through a permutation of [0, n).
Digraph relabel(const Digraph& d, const std::vector<int>& sigma);
Arc relabel_arc(Arc a, const std::vector<int>& sigma);
std::vector<Arc> relabel_arcs(const std::vector<Arc>& s, const std::vector<int>& sigma);

namespace detail {
// alpha without the subset-validation pass; s must already be a valid
// subset of d's arcs.
Composition alpha_unchecked(const Digraph& d, const std::vector<Arc>& s);
} // namespace detail

} // namespace cnsf
