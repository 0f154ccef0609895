#pragma once

// Modular decomposition: module tests, splitter closure, the tree of strong
// modules, quotients, and the partition induced by a prime-inducing subset.

#include "primebound/disjoint_set.hpp"
#include "primebound/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace primebound {

// M is a module when every outside vertex is adjacent to all of M or none of it.
inline bool is_module(const Graph& g, const VertexSet& m) {
    if (static_cast<int>(m.size()) != g.size())
        throw std::invalid_argument("vertex set universe does not match the graph");
    for (int v = 0; v < g.size(); ++v) {
        if (m.test(v)) continue;
        VertexSet hit = g.neighbors(v) & m;
        if (hit.any() && hit != m) return false;
    }
    return true;
}

// Smallest module containing the seed: repeatedly absorb any splitter, i.e.
// any outside vertex adjacent to part of the current set but not all of it.
inline VertexSet module_closure(const Graph& g, VertexSet seed) {
    if (static_cast<int>(seed.size()) != g.size())
        throw std::invalid_argument("vertex set universe does not match the graph");
    if (seed.none())
        throw std::invalid_argument("module_closure needs a non-empty seed");
    bool grew = true;
    while (grew) {
        grew = false;
        for (int v = 0; v < g.size(); ++v) {
            if (seed.test(v)) continue;
            VertexSet hit = g.neighbors(v) & seed;
            if (hit.any() && hit != seed) {
                seed.set(v);
                grew = true;
            }
        }
    }
    return seed;
}

enum class NodeLabel { leaf, complete, empty, prime };

inline const char* to_string(NodeLabel l) {
    switch (l) {
        case NodeLabel::leaf: return "leaf";
        case NodeLabel::complete: return "complete";
        case NodeLabel::empty: return "empty";
        case NodeLabel::prime: return "prime";
    }
    return "?";
}

// Blocks of a partition of the vertex set, ordered by minimum vertex id.
using ModularPartition = std::vector<VertexSet>;

namespace detail {

struct TopSplit {
    ModularPartition blocks;
    NodeLabel label;
};

// Coarsest modular partition of g into maximal proper strong modules,
// together with the quotient's kind.  Disconnected: the components (quotient
// edgeless).  Co-disconnected: the co-components (quotient complete).
// Otherwise the quotient is prime and the blocks are the maximal modules
// proper in g, found by merging vertex pairs whose closure stays proper.
inline TopSplit top_split(const Graph& g) {
    const int n = g.size();
    std::vector<VertexSet> comps = connected_components(g);
    NodeLabel label;
    std::vector<VertexSet> blocks;
    if (comps.size() > 1) {
        label = NodeLabel::empty;
        blocks = std::move(comps);
    } else {
        std::vector<VertexSet> cocomps = connected_components(complement(g));
        if (cocomps.size() > 1) {
            label = NodeLabel::complete;
            blocks = std::move(cocomps);
        } else {
            label = NodeLabel::prime;
            DisjointSet ds(n);
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    if (ds.same(u, v)) continue;
                    VertexSet pair(n);
                    pair.set(u);
                    pair.set(v);
                    VertexSet cl = module_closure(g, pair);
                    if (static_cast<int>(cl.count()) == n) continue;
                    // cl is a proper module: everything inside it coalesces
                    int anchor = static_cast<int>(cl.find_first());
                    for (auto w = cl.find_next(anchor); w != VertexSet::npos;
                         w = cl.find_next(w))
                        ds.unite(anchor, static_cast<int>(w));
                }
            }
            std::map<int, VertexSet> by_root;
            for (int v = 0; v < n; ++v) {
                auto [it, fresh] = by_root.try_emplace(ds.find(v), VertexSet(n));
                it->second.set(v);
            }
            for (auto& [root, blk] : by_root) blocks.push_back(std::move(blk));
        }
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const VertexSet& a, const VertexSet& b) {
                  return a.find_first() < b.find_first();
              });
    return {std::move(blocks), label};
}

}  // namespace detail

// The coarsest partition of V(g) into maximal proper strong modules (n >= 2).
inline ModularPartition maximal_modular_partition(const Graph& g) {
    if (g.size() < 2)
        throw std::invalid_argument("modular partition needs at least two vertices");
    return detail::top_split(g).blocks;
}

// Prime: n >= 4 and only trivial modules.  Equivalent: g and its complement
// are connected and every maximal proper strong module is a single vertex.
inline bool is_prime(const Graph& g) {
    if (g.size() < 4) return false;
    detail::TopSplit top = detail::top_split(g);
    if (top.label != NodeLabel::prime) return false;
    for (const VertexSet& blk : top.blocks)
        if (blk.count() != 1) return false;
    return true;
}

struct StrongModuleTree {
    struct Node {
        VertexSet vertices;
        NodeLabel label = NodeLabel::leaf;
        int parent = -1;
        std::vector<int> children;  // ordered by minimum vertex id
    };

    std::vector<Node> nodes;  // nodes[0] is the root

    int root() const { return 0; }
    const Node& node(int i) const { return nodes.at(i); }
    bool is_leaf(int i) const { return nodes.at(i).children.empty(); }
};

namespace detail {

inline int build_tree(const Graph& g, const VertexSet& m, int parent,
                      StrongModuleTree& t) {
    const int idx = static_cast<int>(t.nodes.size());
    t.nodes.push_back({m, NodeLabel::leaf, parent, {}});
    if (m.count() == 1) return idx;
    InducedSubgraph sub = induced_subgraph(g, m);
    TopSplit top = top_split(sub.graph);
    t.nodes[idx].label = top.label;
    for (const VertexSet& blk : top.blocks) {
        VertexSet lifted(g.size());
        for (auto v = blk.find_first(); v != VertexSet::npos; v = blk.find_next(v))
            lifted.set(sub.to_parent[v]);
        int child = build_tree(g, lifted, idx, t);
        t.nodes[idx].children.push_back(child);
    }
    return idx;
}

}  // namespace detail

// Tree of all strong modules, root V(g), leaves the single vertices (n >= 1).
inline StrongModuleTree strong_module_tree(const Graph& g) {
    if (g.size() == 0)
        throw std::invalid_argument("the empty graph has no decomposition tree");
    StrongModuleTree t;
    detail::build_tree(g, g.vertex_set(), -1, t);
    return t;
}

// Quotient by a modular partition: one vertex per block, blocks ordered by
// minimum vertex id, adjacency inherited from any representatives.
inline Graph quotient(const Graph& g, const ModularPartition& partition) {
    VertexSet covered(g.size());
    for (const VertexSet& blk : partition) {
        if (static_cast<int>(blk.size()) != g.size())
            throw std::invalid_argument("partition block universe does not match");
        if (blk.none()) throw std::invalid_argument("partition block is empty");
        if ((covered & blk).any())
            throw std::invalid_argument("partition blocks overlap");
        if (!is_module(g, blk))
            throw std::invalid_argument("partition block is not a module");
        covered |= blk;
    }
    if (covered != g.vertex_set())
        throw std::invalid_argument("partition does not cover the vertex set");

    std::vector<VertexSet> blocks = partition;
    std::sort(blocks.begin(), blocks.end(),
              [](const VertexSet& a, const VertexSet& b) {
                  return a.find_first() < b.find_first();
              });
    const int k = static_cast<int>(blocks.size());
    Graph q(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.has_edge(min_vertex(blocks[i]), min_vertex(blocks[j])))
                q.add_edge(i, j);
    return q;
}

// Smallest strong module containing w: descend from the root while some
// child still contains w.
inline VertexSet up(const StrongModuleTree& t, const VertexSet& w) {
    if (w.none()) throw std::invalid_argument("up needs a non-empty vertex set");
    if (!w.is_subset_of(t.node(t.root()).vertices))
        throw std::invalid_argument("vertex set is not inside the tree's graph");
    int cur = t.root();
    for (;;) {
        int next = -1;
        for (int c : t.node(cur).children)
            if (w.is_subset_of(t.node(c).vertices)) {
                next = c;
                break;
            }
        if (next < 0) return t.node(cur).vertices;
        cur = next;
    }
}

// Smallest strong module strictly containing w (w must be a proper subset of V).
inline VertexSet strict_up(const StrongModuleTree& t, const VertexSet& w) {
    if (w.none()) throw std::invalid_argument("strict_up needs a non-empty vertex set");
    const VertexSet& all = t.node(t.root()).vertices;
    if (!w.is_subset_of(all))
        throw std::invalid_argument("vertex set is not inside the tree's graph");
    if (w == all)
        throw std::invalid_argument("strict_up is undefined for the whole vertex set");
    int cur = t.root();
    for (;;) {
        int next = -1;
        for (int c : t.node(cur).children) {
            const VertexSet& cv = t.node(c).vertices;
            if (w.is_subset_of(cv) && w != cv) {
                next = c;
                break;
            }
        }
        if (next < 0) return t.node(cur).vertices;
        cur = next;
    }
}

// How the rest of the graph sees a prime-inducing subset x: each outside
// vertex either sees x as a module ("uniform"), mirrors exactly one u in x
// on x minus u (a "twin" of u), or splits x in some other way ("extender").
struct RelativePartition {
    VertexSet extenders;
    VertexSet uniform;
    std::vector<std::pair<int, VertexSet>> twins;  // (u in x, its twins), by u
};

inline RelativePartition partition_relative_to_prime(const Graph& g,
                                                     const VertexSet& x) {
    if (!is_prime(induced_subgraph(g, x).graph))
        throw std::invalid_argument("subset does not induce a prime graph");
    RelativePartition out{VertexSet(g.size()), VertexSet(g.size()), {}};
    std::map<int, VertexSet> twins;
    for (int v = 0; v < g.size(); ++v) {
        if (x.test(v)) continue;
        if (uniform_to(g, v, x) != Uniformity::mixed) {
            out.uniform.set(v);
            continue;
        }
        int mate = -1;
        for (auto u = x.find_first(); u != VertexSet::npos; u = x.find_next(u)) {
            VertexSet diff = (g.neighbors(v) ^ g.neighbors(static_cast<int>(u))) & x;
            diff.reset(u);
            if (diff.none()) {
                mate = static_cast<int>(u);
                break;
            }
        }
        if (mate >= 0) {
            auto [it, fresh] = twins.try_emplace(mate, VertexSet(g.size()));
            it->second.set(v);
        } else {
            out.extenders.set(v);
        }
    }
    out.twins.assign(twins.begin(), twins.end());
    return out;
}

}  // namespace primebound
