#include "cnsf/digraph.hpp"

#include <algorithm>

#include "cnsf/detail/union_find.hpp"

namespace cnsf {

Digraph::Digraph(int n, std::vector<Arc> arcs)
    : n_(n), arcs_(std::move(arcs)), outdeg_(std::max(n, 0), 0), indeg_(std::max(n, 0), 0) {
    if (n_ < 0) {
        throw InputError("vertex count must be nonnegative");
    }
    std::sort(arcs_.begin(), arcs_.end());
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        const auto [u, v] = arcs_[i];
        if (u == v) {
            throw InputError("directed loops are not allowed");
        }
        if (u < 0 || v < 0 || u >= n_ || v >= n_) {
            throw InputError("arc endpoint out of range");
        }
        if (i > 0 && arcs_[i] == arcs_[i - 1]) {
            throw InputError("duplicate arc");
        }
        ++outdeg_[u];
        ++indeg_[v];
    }
    // The 2-set map to undirected edges would silently merge anti-parallel
    // pairs, so they are rejected up front.
    for (const auto& [u, v] : arcs_) {
        if (u < v && std::binary_search(arcs_.begin(), arcs_.end(), Arc{v, u})) {
            throw InputError("anti-parallel arc pair");
        }
    }
}

bool Digraph::has_arc(Arc a) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), a);
}

int Digraph::outdegree(int v) const {
    if (v < 0 || v >= n_) {
        throw InputError("vertex out of range");
    }
    return outdeg_[v];
}

int Digraph::indegree(int v) const {
    if (v < 0 || v >= n_) {
        throw InputError("vertex out of range");
    }
    return indeg_[v];
}

UndirectedGraph underlying_graph(const Digraph& d) {
    std::vector<UndirectedGraph::Edge> edges;
    edges.reserve(d.arcs().size());
    for (const auto& [u, v] : d.arcs()) {
        edges.emplace_back(u, v);
    }
    return UndirectedGraph(d.vertex_count(), std::move(edges));
}

int total_degree(const Digraph& d, const std::vector<int>& vertex_subset) {
    std::vector<char> seen(d.vertex_count(), 0);
    int td = 0;
    for (int v : vertex_subset) {
        if (v < 0 || v >= d.vertex_count()) {
            throw InputError("vertex out of range");
        }
        if (seen[v]) {
            throw InputError("duplicate vertex in subset");
        }
        seen[v] = 1;
        td += d.outdegree(v) - d.indegree(v);
    }
    return td;
}

namespace {

struct Component {
    std::vector<int> vertices; // ascending
    int total_degree = 0;
};

std::vector<Component> components_of(const Digraph& d, const std::vector<Arc>& s) {
    detail::UnionFind uf(d.vertex_count());
    for (const auto& [u, v] : s) {
        uf.unite(u, v);
    }
    std::vector<int> root_slot(d.vertex_count(), -1);
    std::vector<Component> components;
    for (int v = 0; v < d.vertex_count(); ++v) {
        const int root = uf.find(v);
        if (root_slot[root] < 0) {
            root_slot[root] = static_cast<int>(components.size());
            components.emplace_back();
        }
        Component& comp = components[root_slot[root]];
        comp.vertices.push_back(v); // ascending since v is
        comp.total_degree += d.outdegree(v) - d.indegree(v);
    }
    return components;
}

void validate_subset(const Digraph& d, const std::vector<Arc>& s) {
    for (const Arc& a : s) {
        if (!d.has_arc(a)) {
            throw InputError("arc subset contains an arc not in the digraph");
        }
    }
    std::vector<Arc> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InputError("arc subset contains a duplicate arc");
    }
}

bool word_greater(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

ComponentTuple component_tuple(const Digraph& d, const std::vector<Arc>& s) {
    validate_subset(d, s);
    std::vector<Component> components = components_of(d, s);
    std::sort(components.begin(), components.end(), [](const Component& a, const Component& b) {
        if (a.vertices.size() != b.vertices.size()) {
            return a.vertices.size() > b.vertices.size();
        }
        return word_greater(a.vertices, b.vertices);
    });
    std::vector<std::vector<int>> blocks;
    blocks.reserve(components.size());
    for (Component& c : components) {
        blocks.push_back(std::move(c.vertices));
    }
    return ComponentTuple(std::move(blocks));
}

namespace detail {

Composition alpha_unchecked(const Digraph& d, const std::vector<Arc>& s) {
    std::vector<Component> components = components_of(d, s);
    std::sort(components.begin(), components.end(), [](const Component& a, const Component& b) {
        if (a.total_degree != b.total_degree) {
            return a.total_degree > b.total_degree;
        }
        if (a.vertices.size() != b.vertices.size()) {
            return a.vertices.size() > b.vertices.size();
        }
        return word_greater(a.vertices, b.vertices);
    });
    std::vector<int> parts;
    parts.reserve(components.size());
    for (const Component& c : components) {
        parts.push_back(static_cast<int>(c.vertices.size()));
    }
    return Composition(std::move(parts));
}

} // namespace detail

Composition alpha(const Digraph& d, const std::vector<Arc>& s) {
    validate_subset(d, s);
    return detail::alpha_unchecked(d, s);
}

namespace {

void validate_permutation(const std::vector<int>& sigma, int n) {
    if (static_cast<int>(sigma.size()) != n) {
        throw InputError("permutation length does not match vertex count");
    }
    std::vector<char> seen(n, 0);
    for (int image : sigma) {
        if (image < 0 || image >= n || seen[image]) {
            throw InputError("not a permutation of the vertex range");
        }
        seen[image] = 1;
    }
}

} // namespace

Digraph relabel(const Digraph& d, const std::vector<int>& sigma) {
    validate_permutation(sigma, d.vertex_count());
    std::vector<Arc> arcs;
    arcs.reserve(d.arcs().size());
    for (const Arc& a : d.arcs()) {
        arcs.push_back(relabel_arc(a, sigma));
    }
    return Digraph(d.vertex_count(), std::move(arcs));
}

Arc relabel_arc(Arc a, const std::vector<int>& sigma) {
    const int n = static_cast<int>(sigma.size());
    if (a.first < 0 || a.second < 0 || a.first >= n || a.second >= n) {
        throw InputError("arc endpoint out of range");
    }
    return Arc{sigma[a.first], sigma[a.second]};
}

std::vector<Arc> relabel_arcs(const std::vector<Arc>& s, const std::vector<int>& sigma) {
    std::vector<Arc> out;
    out.reserve(s.size());
    for (const Arc& a : s) {
        out.push_back(relabel_arc(a, sigma));
    }
    return out;
}

} // namespace cnsf
