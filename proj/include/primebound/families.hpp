#pragma once

// Families of breakable modules: maximal clique / stable / prime-inducing
// modules, the coarse partitions they induce, and Sabidussi classes.

#include "primebound/disjoint_set.hpp"
#include "primebound/graph.hpp"
#include "primebound/moddecomp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace primebound {

namespace detail {

inline void sort_blocks_by_min(std::vector<VertexSet>& blocks) {
    std::sort(blocks.begin(), blocks.end(),
              [](const VertexSet& a, const VertexSet& b) {
                  return a.find_first() < b.find_first();
              });
}

inline void sort_families(std::vector<VertexSet>& fams) {
    std::sort(fams.begin(), fams.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.count() != b.count()) return a.count() > b.count();
        return a.find_first() < b.find_first();
    });
}

}  // namespace detail

// Inclusion-minimal modules of size >= 2.  Every such module is the closure
// of one of its vertex pairs, so the pair closures are a complete candidate
// pool.  A prime graph has nothing to report: its only size->=2 module is the
// whole vertex set, and breaking it is not this family's business.
inline std::vector<VertexSet> minimal_modules(const Graph& g) {
    const int n = g.size();
    if (n < 2 || is_prime(g)) return {};
    std::set<VertexSet> closures;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            VertexSet pair(n);
            pair.set(u);
            pair.set(v);
            closures.insert(module_closure(g, pair));
        }
    std::vector<VertexSet> candidates(closures.begin(), closures.end());
    std::sort(candidates.begin(), candidates.end(),
              [](const VertexSet& a, const VertexSet& b) {
                  if (a.count() != b.count()) return a.count() < b.count();
                  return a < b;
              });
    std::vector<VertexSet> minimal;
    for (const VertexSet& c : candidates) {
        bool dominated = false;
        for (const VertexSet& kept : minimal)
            if (kept.is_proper_subset_of(c)) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(c);
    }
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

struct FamilyReport {
    std::vector<VertexSet> cliques;        // maximal clique modules
    std::vector<VertexSet> stables;        // maximal stable modules
    std::vector<VertexSet> primes;         // modules inducing a prime graph
    VertexSet singles;                     // vertices in none of the above
    std::vector<VertexSet> approx_classes; // partition spanned by minimal modules
    std::vector<VertexSet> twin_classes;   // leaves grouped by tree parent
    std::vector<VertexSet> sabidussi;      // equal-open-neighborhood classes
};

inline std::vector<VertexSet> sabidussi_classes(const Graph& g) {
    std::map<VertexSet, VertexSet> by_nbhd;
    for (int v = 0; v < g.size(); ++v) {
        auto [it, fresh] = by_nbhd.try_emplace(g.neighbors(v), VertexSet(g.size()));
        it->second.set(v);
    }
    std::vector<VertexSet> classes;
    for (auto& [nbhd, members] : by_nbhd) classes.push_back(members);
    detail::sort_blocks_by_min(classes);
    return classes;
}

namespace detail {

struct TreeFamilies {
    std::vector<VertexSet> cliques, stables, primes, twin_classes;
    VertexSet singles;
};

inline TreeFamilies families_from_tree(const Graph& g, const StrongModuleTree& t) {
    TreeFamilies out;
    out.singles = VertexSet(g.size());
    const bool whole_graph_prime = is_prime(g);
    for (int i = 0; i < static_cast<int>(t.nodes.size()); ++i) {
        const auto& node = t.nodes[i];
        if (node.children.empty()) continue;
        VertexSet cls(g.size());
        bool all_leaves = true;
        for (int c : node.children) {
            if (t.is_leaf(c))
                cls |= t.node(c).vertices;
            else
                all_leaves = false;
        }
        if (cls.none()) continue;
        out.twin_classes.push_back(cls);
        if (cls.count() < 2) {
            out.singles |= cls;
        } else if (node.label == NodeLabel::complete) {
            out.cliques.push_back(cls);
        } else if (node.label == NodeLabel::empty) {
            out.stables.push_back(cls);
        } else if (all_leaves && !(i == t.root() && whole_graph_prime)) {
            out.primes.push_back(node.vertices);
        } else {
            // leaf children of a prime node that keeps other structure (or the
            // root of a graph that is already prime): nothing to exploit
            out.singles |= cls;
        }
    }
    return out;
}

}  // namespace detail

// Computes every family in two independent ways (from minimal modules and
// from the strong module tree) and insists they agree.
inline FamilyReport compute_families(const Graph& g) {
    const int n = g.size();
    if (n < 1) throw std::invalid_argument("compute_families needs at least one vertex");

    FamilyReport rep;
    rep.singles = VertexSet(n);

    if (n == 1) {
        rep.approx_classes = {make_vertex_set(1, {0})};
        rep.twin_classes = {make_vertex_set(1, {0})};
        rep.sabidussi = {make_vertex_set(1, {0})};
        rep.singles.set(0);
        return rep;
    }

    // route one: span of the minimal modules
    std::vector<VertexSet> mins = minimal_modules(g);
    DisjointSet ds(n);
    for (const VertexSet& m : mins) {
        int anchor = min_vertex(m);
        for (auto v = m.find_next(anchor); v != VertexSet::npos; v = m.find_next(v))
            ds.unite(anchor, static_cast<int>(v));
    }
    std::map<int, VertexSet> by_root;
    for (int v = 0; v < n; ++v) {
        auto [it, fresh] = by_root.try_emplace(ds.find(v), VertexSet(n));
        it->second.set(v);
    }
    std::vector<VertexSet> cliques_a, stables_a, primes_a;
    for (auto& [root, blk] : by_root) {
        rep.approx_classes.push_back(blk);
        if (blk.count() < 2) {
            rep.singles |= blk;
        } else if (is_clique(g, blk)) {
            cliques_a.push_back(blk);
        } else if (is_stable(g, blk)) {
            stables_a.push_back(blk);
        } else {
            if (!is_module(g, blk) || !is_prime(induced_subgraph(g, blk).graph))
                throw std::logic_error(
                    "family computation bug: non-clique, non-stable class does not "
                    "induce a prime module");
            primes_a.push_back(blk);
        }
    }
    detail::sort_blocks_by_min(rep.approx_classes);
    detail::sort_families(cliques_a);
    detail::sort_families(stables_a);
    detail::sort_families(primes_a);

    // route two: read the same families off the strong module tree
    StrongModuleTree tree = strong_module_tree(g);
    detail::TreeFamilies tf = detail::families_from_tree(g, tree);
    detail::sort_families(tf.cliques);
    detail::sort_families(tf.stables);
    detail::sort_families(tf.primes);
    detail::sort_blocks_by_min(tf.twin_classes);

    if (cliques_a != tf.cliques || stables_a != tf.stables || primes_a != tf.primes ||
        rep.singles != tf.singles)
        throw std::logic_error(
            "family computation bug: minimal-module route and tree route disagree");

    rep.cliques = std::move(cliques_a);
    rep.stables = std::move(stables_a);
    rep.primes = std::move(primes_a);
    rep.twin_classes = std::move(tf.twin_classes);
    rep.sabidussi = sabidussi_classes(g);

    // false-twin classes of size >= 2 are exactly the maximal stable modules
    std::vector<VertexSet> fat_sab;
    for (const VertexSet& c : rep.sabidussi)
        if (c.count() >= 2) fat_sab.push_back(c);
    detail::sort_families(fat_sab);
    if (fat_sab != rep.stables)
        throw std::logic_error(
            "family computation bug: Sabidussi classes disagree with stable modules");

    return rep;
}

struct MaxFamilies {
    std::vector<VertexSet> cliques;
    std::vector<VertexSet> stables;
};

// Largest breakable size over cliques and stables (1 when there are none).
inline int max_breakable_size(const FamilyReport& rep) {
    std::size_t m = 1;
    for (const VertexSet& c : rep.cliques) m = std::max(m, c.count());
    for (const VertexSet& s : rep.stables) m = std::max(m, s.count());
    return static_cast<int>(m);
}

inline MaxFamilies max_families(const FamilyReport& rep) {
    MaxFamilies out;
    const std::size_t m = static_cast<std::size_t>(max_breakable_size(rep));
    if (m < 2) return out;
    for (const VertexSet& c : rep.cliques)
        if (c.count() == m) out.cliques.push_back(c);
    for (const VertexSet& s : rep.stables)
        if (s.count() == m) out.stables.push_back(s);
    return out;
}

inline MaxFamilies max_families(const Graph& g) {
    return max_families(compute_families(g));
}

}  // namespace primebound
