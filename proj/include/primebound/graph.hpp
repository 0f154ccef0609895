#pragma once

// Dense undirected graphs on vertex ids 0..n-1 with bitset neighbourhoods.

#include <boost/dynamic_bitset.hpp>

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace primebound {

// Set of vertices inside a fixed universe 0..n-1; bit i <=> vertex i.
// Comparing two sets with < treats them as binary numbers (bit i has
// weight 2^i), which is the tie-break order used throughout.
using VertexSet = boost::dynamic_bitset<>;

inline std::vector<int> to_vertex_list(const VertexSet& s) {
    std::vector<int> out;
    out.reserve(s.count());
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v))
        out.push_back(static_cast<int>(v));
    return out;
}

inline VertexSet make_vertex_set(int n, std::initializer_list<int> members) {
    VertexSet s(n);
    for (int v : members) {
        if (v < 0 || v >= n) throw std::out_of_range("vertex id out of range");
        s.set(v);
    }
    return s;
}

inline int min_vertex(const VertexSet& s) {
    auto f = s.find_first();
    return f == VertexSet::npos ? -1 : static_cast<int>(f);
}

class Graph {
public:
    explicit Graph(int n) {
        if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
        n_ = n;
        adj_.assign(n, VertexSet(n));
    }

    int size() const { return n_; }

    int edge_count() const {
        int twice = 0;
        for (const VertexSet& row : adj_) twice += static_cast<int>(row.count());
        return twice / 2;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[u].test(v);
    }

    // Loops are rejected; parallel edges collapse silently.
    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        adj_[u].set(v);
        adj_[v].set(u);
    }

    const VertexSet& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).count()); }

    VertexSet vertex_set() const {
        VertexSet s(n_);
        s.set();
        return s;
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }
    bool operator!=(const Graph& other) const { return !(*this == other); }

    // Optional display names; either absent or one per vertex.
    bool has_names() const { return !names_.empty(); }

    void set_names(std::vector<std::string> names) {
        if (static_cast<int>(names.size()) != n_)
            throw std::invalid_argument("name list must cover every vertex");
        names_ = std::move(names);
    }

    const std::vector<std::string>& names() const { return names_; }

    std::string display_name(int v) const {
        check_vertex(v);
        return has_names() ? names_[v] : std::to_string(v);
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
    }

    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::string> names_;
};

inline Graph complement(const Graph& g) {
    const int n = g.size();
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) h.add_edge(u, v);
    if (g.has_names()) h.set_names(g.names());
    return h;
}

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;  // to_parent[i] = vertex id in the host graph
};

// Induced subgraph on w; vertex i of the result is the i-th smallest member of w.
inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w) {
    if (static_cast<int>(w.size()) != g.size())
        throw std::invalid_argument("vertex set universe does not match the graph");
    std::vector<int> ids = to_vertex_list(w);
    const int k = static_cast<int>(ids.size());
    Graph h(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.has_edge(ids[i], ids[j])) h.add_edge(i, j);
    if (g.has_names()) {
        std::vector<std::string> names(k);
        for (int i = 0; i < k; ++i) names[i] = g.names()[ids[i]];
        h.set_names(std::move(names));
    }
    return {std::move(h), std::move(ids)};
}

inline bool is_clique(const Graph& g, const VertexSet& w) {
    if (static_cast<int>(w.size()) != g.size())
        throw std::invalid_argument("vertex set universe does not match the graph");
    for (auto v = w.find_first(); v != VertexSet::npos; v = w.find_next(v)) {
        VertexSet missing = w & ~g.neighbors(static_cast<int>(v));
        missing.reset(v);
        if (missing.any()) return false;
    }
    return true;
}

inline bool is_stable(const Graph& g, const VertexSet& w) {
    if (static_cast<int>(w.size()) != g.size())
        throw std::invalid_argument("vertex set universe does not match the graph");
    for (auto v = w.find_first(); v != VertexSet::npos; v = w.find_next(v))
        if ((g.neighbors(static_cast<int>(v)) & w).any()) return false;
    return true;
}

inline VertexSet isolated_vertices(const Graph& g) {
    VertexSet iso(g.size());
    for (int v = 0; v < g.size(); ++v)
        if (g.neighbors(v).none()) iso.set(v);
    return iso;
}

enum class Uniformity { nonadjacent = 0, adjacent = 1, mixed = 2 };

// How vertex v relates to the set w (v must lie outside w).  The empty set
// counts as nonadjacent.
inline Uniformity uniform_to(const Graph& g, int v, const VertexSet& w) {
    if (static_cast<int>(w.size()) != g.size())
        throw std::invalid_argument("vertex set universe does not match the graph");
    if (w.test(v)) throw std::invalid_argument("uniform_to expects v outside w");
    VertexSet hit = g.neighbors(v) & w;
    if (hit.none()) return Uniformity::nonadjacent;
    if (hit == w) return Uniformity::adjacent;
    return Uniformity::mixed;
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    VertexSet remaining = g.vertex_set();
    while (remaining.any()) {
        VertexSet comp(g.size());
        VertexSet frontier(g.size());
        frontier.set(remaining.find_first());
        while (frontier.any()) {
            comp |= frontier;
            VertexSet next(g.size());
            for (auto v = frontier.find_first(); v != VertexSet::npos;
                 v = frontier.find_next(v))
                next |= g.neighbors(static_cast<int>(v));
            frontier = next & ~comp;
        }
        comps.push_back(comp);
        remaining &= ~comp;
    }
    return comps;
}

}  // namespace primebound
