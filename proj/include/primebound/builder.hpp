#pragma once

// Constructing optimal prime extensions.  Each routine realizes one case of
// the bound analysis; the dispatcher picks the case from the certificate.

#include "primebound/bound.hpp"
#include "primebound/families.hpp"
#include "primebound/graph.hpp"
#include "primebound/moddecomp.hpp"

#include <json.hpp>

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace primebound {

// ---------------------------------------------------------------------------
// stable/stable gadget

struct StableGadget {
    Graph graph{0};        // vertices 0..s_size-1 are S, then the s' block
    int s_size = 0;
    int sprime_size = 0;
    std::vector<int> phi;  // phi[j] = the S-vertex whose neighborhood is S' minus s'_j
};

// Primality test for a graph split into two stable sets S and S' with
// |S'| = ceil(log2(|S|+1)): neighborhoods inside S' must be distinct and
// non-empty, and when |S| = 2^(|S'|-1) no degree-one vertex of S may be
// matched to a degree-one vertex of S'.
inline bool check_2xstable(const Graph& g, const VertexSet& s, const VertexSet& sp) {
    if (static_cast<int>(s.size()) != g.size() ||
        static_cast<int>(sp.size()) != g.size())
        throw std::invalid_argument("vertex set universe does not match the graph");
    if ((s & sp).any() || (s | sp) != g.vertex_set())
        throw std::invalid_argument("S and S' must partition the vertex set");
    if (!is_stable(g, s) || !is_stable(g, sp))
        throw std::invalid_argument("S and S' must both be stable");
    if (s.count() < 2) throw std::invalid_argument("S must have at least two vertices");
    if (static_cast<int>(sp.count()) != ceil_log2(static_cast<int>(s.count()) + 1))
        throw std::invalid_argument("|S'| must be ceil(log2(|S|+1))");

    std::set<VertexSet> seen;
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
        VertexSet nb = g.neighbors(static_cast<int>(v)) & sp;
        if (nb.none()) return false;
        if (!seen.insert(nb).second) return false;
    }
    if (s.count() == (std::size_t{1} << (sp.count() - 1))) {
        for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
            if (g.degree(static_cast<int>(v)) != 1) continue;
            int mate = min_vertex(g.neighbors(static_cast<int>(v)));
            if (g.degree(mate) == 1) return false;
        }
    }
    return true;
}

// Prime bipartite gadget on a stable set S of a given size plus
// q = ceil(log2(|S|+1)) fresh vertices.  The top q vertices of S anchor the
// co-singleton neighborhoods (vertex |S|-1-j gets S' minus s'_j); the rest
// take the smallest unused non-empty subsets in increasing binary value.
inline StableGadget build_stable_stable_gadget(int size_s) {
    if (size_s < 3)
        throw std::invalid_argument("stable/stable gadget needs |S| >= 3");
    const int q = ceil_log2(size_s + 1);
    StableGadget out;
    out.s_size = size_s;
    out.sprime_size = q;
    out.graph = Graph(size_s + q);
    out.phi.assign(q, -1);

    const unsigned full = (1u << q) - 1u;
    std::vector<char> used(full + 1, 0);
    auto wire = [&](int s, unsigned mask) {
        for (int j = 0; j < q; ++j)
            if (mask >> j & 1) out.graph.add_edge(s, size_s + j);
    };
    for (int j = 0; j < q; ++j) {
        const int s = size_s - 1 - j;
        const unsigned mask = full ^ (1u << j);
        out.phi[j] = s;
        used[mask] = 1;
        wire(s, mask);
    }
    unsigned next = 1;
    for (int s = 0; s < size_s - q; ++s) {
        while (used[next]) ++next;
        used[next] = 1;
        wire(s, next);
    }

    VertexSet sset(size_s + q), spset(size_s + q);
    for (int v = 0; v < size_s; ++v) sset.set(v);
    for (int j = 0; j < q; ++j) spset.set(size_s + j);
    if (!check_2xstable(out.graph, sset, spset))
        throw std::logic_error("gadget construction bug: primality criterion failed");
    return out;
}

// ---------------------------------------------------------------------------
// one-vertex extensions of prime graphs

namespace detail {

inline VertexSet next_numeric(VertexSet s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!s.test(i)) {
            s.set(i);
            return s;
        }
        s.reset(i);
    }
    throw std::overflow_error("ran out of vertex subsets");
}

inline std::set<VertexSet> forbidden_one_extension_sets(const Graph& g) {
    std::set<VertexSet> forbidden;
    forbidden.insert(VertexSet(g.size()));
    forbidden.insert(g.vertex_set());
    for (int v = 0; v < g.size(); ++v) {
        forbidden.insert(g.neighbors(v));
        VertexSet closed = g.neighbors(v);
        closed.set(v);
        forbidden.insert(closed);
    }
    return forbidden;
}

}  // namespace detail

// Neighborhoods A such that attaching one new vertex with neighborhood A to
// the prime graph g keeps it prime: every subset except the empty set, the
// whole set, and the open/closed neighborhoods of existing vertices.
inline std::vector<VertexSet> prime_one_extension_neighborhoods(const Graph& g) {
    if (!is_prime(g)) throw std::invalid_argument("graph must be prime");
    if (g.size() > 20)
        throw std::invalid_argument("refusing to enumerate 2^n subsets for n > 20");
    std::set<VertexSet> forbidden = detail::forbidden_one_extension_sets(g);
    std::vector<VertexSet> out;
    VertexSet cand(g.size());
    const unsigned long long total = 1ull << g.size();
    for (unsigned long long i = 0; i < total; ++i) {
        if (!forbidden.count(cand)) out.push_back(cand);
        if (i + 1 < total) cand = detail::next_numeric(cand);
    }
    return out;
}

// First admissible neighborhood in increasing binary value; needs no
// enumeration since only 2n+2 subsets are ever excluded.
inline VertexSet smallest_one_extension_neighborhood(const Graph& g) {
    if (!is_prime(g)) throw std::invalid_argument("graph must be prime");
    std::set<VertexSet> forbidden = detail::forbidden_one_extension_sets(g);
    VertexSet cand(g.size());
    cand = detail::next_numeric(cand);  // start at {0}
    while (forbidden.count(cand)) cand = detail::next_numeric(cand);
    return cand;
}

// ---------------------------------------------------------------------------
// extension results

struct ExtensionResult {
    Graph h{0};
    VertexSet original;  // image of V(g) inside h (always the low ids)
    VertexSet added;
    int p = 0;
    BoundCase kind = BoundCase::already_prime;
    nlohmann::json trace;
};

namespace detail {

inline Graph extend_vertices(const Graph& g, int extra) {
    Graph h(g.size() + extra);
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (g.has_edge(u, v)) h.add_edge(u, v);
    if (g.has_names()) {
        std::vector<std::string> names = g.names();
        for (int i = 0; i < extra; ++i) names.push_back("x" + std::to_string(i));
        h.set_names(std::move(names));
    }
    return h;
}

inline ExtensionResult finish_extension(Graph h, int n, int p, BoundCase kind,
                                        nlohmann::json trace) {
    ExtensionResult r;
    r.h = std::move(h);
    r.original = VertexSet(n + p);
    for (int v = 0; v < n; ++v) r.original.set(v);
    r.added = VertexSet(n + p);
    for (int j = 0; j < p; ++j) r.added.set(n + j);
    r.p = p;
    r.kind = kind;
    r.trace = std::move(trace);
    return r;
}

inline nlohmann::json attachments_json(const Graph& h, int n) {
    nlohmann::json out = nlohmann::json::object();
    for (int v = 0; v < n; ++v) {
        std::vector<int> to_added;
        for (int j = n; j < h.size(); ++j)
            if (h.has_edge(v, j)) to_added.push_back(j);
        if (!to_added.empty()) out[std::to_string(v)] = to_added;
    }
    return out;
}

inline void wire_prime_family(Graph& h, const Graph& g, const VertexSet& pset,
                              const std::vector<int>& added) {
    InducedSubgraph sub = induced_subgraph(g, pset);
    VertexSet nb = smallest_one_extension_neighborhood(sub.graph);
    for (int a : added)
        for (auto i = nb.find_first(); i != VertexSet::npos; i = nb.find_next(i))
            h.add_edge(a, sub.to_parent[i]);
}

// Every added vertex must split each prime family as an extender; the
// construction relies on it, so fail loudly if it ever breaks.
inline void assert_added_extend_prime_families(const Graph& h, int n,
                                               const std::vector<VertexSet>& primes) {
    const int extra = h.size() - n;
    for (const VertexSet& pset : primes) {
        VertexSet region(h.size());
        for (auto v = pset.find_first(); v != VertexSet::npos; v = pset.find_next(v))
            region.set(v);
        for (int j = 0; j < extra; ++j) region.set(n + j);
        InducedSubgraph sub = induced_subgraph(h, region);
        const int psize = static_cast<int>(pset.count());
        VertexSet x(sub.graph.size());
        for (int i = 0; i < psize; ++i) x.set(i);  // family members sort first
        VertexSet expected = ~x;
        RelativePartition rp = partition_relative_to_prime(sub.graph, x);
        if (rp.extenders != expected)
            throw std::logic_error(
                "construction bug: an added vertex fails to extend a prime family");
    }
}

inline ExtensionResult mainone_core(const Graph& g, const FamilyReport& fam, int m,
                                    const VertexSet& s0) {
    const int n = g.size();
    const int q = ceil_log2(m + 1);
    Graph h = extend_vertices(g, q);
    std::vector<int> added(q);
    for (int j = 0; j < q; ++j) added[j] = n + j;

    if (m == 2) {
        // gadget is a P4: new-old-old-new along the clique edge
        const int u = min_vertex(s0);
        const int v = static_cast<int>(s0.find_next(u));
        h.add_edge(added[0], u);
        h.add_edge(added[1], v);
    } else {
        StableGadget gadget = build_stable_stable_gadget(m);
        std::vector<int> s_ids = to_vertex_list(s0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < q; ++j)
                if (gadget.graph.has_edge(i, m + j)) h.add_edge(s_ids[i], added[j]);
    }

    // remaining cliques take subsets 0,1,2,... (all proper since sizes stay
    // below 2^q), remaining stables take 1,2,3,...; members in id order
    auto wire_mask = [&](int v, unsigned mask) {
        for (int j = 0; j < q; ++j)
            if (mask >> j & 1) h.add_edge(v, added[j]);
    };
    for (const VertexSet& c : fam.cliques) {
        if (c == s0) continue;
        if (c.count() >= (std::size_t{1} << q))
            throw std::logic_error("construction bug: clique module larger than m");
        unsigned mask = 0;
        for (auto v = c.find_first(); v != VertexSet::npos; v = c.find_next(v))
            wire_mask(static_cast<int>(v), mask++);
    }
    for (const VertexSet& s : fam.stables) {
        if (s == s0) continue;
        if (s.count() > (std::size_t{1} << q) - 1)
            throw std::logic_error("construction bug: stable module larger than m");
        unsigned mask = 1;
        for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v))
            wire_mask(static_cast<int>(v), mask++);
    }
    for (const VertexSet& pset : fam.primes) wire_prime_family(h, g, pset, added);
    for (auto v = fam.singles.find_first(); v != VertexSet::npos;
         v = fam.singles.find_next(v)) {
        Uniformity u0 = uniform_to(g, static_cast<int>(v), s0);
        if (u0 == Uniformity::mixed)
            throw std::logic_error("construction bug: witness is not a module");
        // the new vertices must disagree with the witness on v; one edge suffices
        if (u0 == Uniformity::nonadjacent) h.add_edge(static_cast<int>(v), added[0]);
    }

    assert_added_extend_prime_families(h, n, fam.primes);

    nlohmann::json trace;
    trace["method"] = "mainone";
    trace["flip"] = false;
    trace["m"] = m;
    trace["s0"] = to_vertex_list(s0);
    trace["s_prime"] = added;
    trace["attachments"] = attachments_json(h, n);
    return finish_extension(std::move(h), n, q,
                            is_power_of_two(m) ? BoundCase::power_iso
                                               : BoundCase::non_power,
                            std::move(trace));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// the three constructions

// Upper-bound construction for m >= 2: add q = ceil(log2(m+1)) vertices, run
// the stable/stable gadget (or a P4 for m = 2) through a maximum witness and
// attach every other family injectively.  Works on the complement when the
// witness has the wrong flavor (the gadget needs a stable witness for m >= 3,
// a clique edge for m = 2); complementing back preserves primality.
inline ExtensionResult build_mainone_extension(const Graph& g, const FamilyReport& fam,
                                               int m) {
    if (m < 2)
        throw std::invalid_argument("logarithmic construction needs m >= 2");
    if (m != max_breakable_size(fam))
        throw std::invalid_argument("m does not match the family report");
    VertexSet s0;
    for (const auto* fams : {&fam.cliques, &fam.stables})
        for (const VertexSet& c : *fams) {
            if (static_cast<int>(c.count()) != m) continue;
            if (s0.empty() || min_vertex(c) < min_vertex(s0)) s0 = c;
        }
    if (s0.empty()) throw std::logic_error("no witness of the maximum size");

    const bool need_clique = (m == 2);
    if (is_clique(g, s0) == need_clique) return detail::mainone_core(g, fam, m, s0);

    Graph gc = complement(g);
    FamilyReport famc = compute_families(gc);
    ExtensionResult inner = detail::mainone_core(gc, famc, m, s0);
    ExtensionResult out;
    out.h = complement(inner.h);
    out.original = inner.original;
    out.added = inner.added;
    out.p = inner.p;
    out.kind = inner.kind;
    out.trace = std::move(inner.trace);
    out.trace["flip"] = true;
    return out;
}

namespace detail {

// m = 2 without the isolated-class obstruction: one vertex adjacent to
// exactly the smaller endpoint of every two-element clique/stable module,
// wired admissibly into prime families, and disagreeing with a fixed
// reference module on every leftover vertex.
inline ExtensionResult pair_split_core(const Graph& g, const FamilyReport& fam) {
    const int n = g.size();
    Graph h = extend_vertices(g, 1);
    const int alpha = n;

    VertexSet c0;
    for (const auto* fams : {&fam.cliques, &fam.stables})
        for (const VertexSet& c : *fams)
            if (c0.empty() || min_vertex(c) < min_vertex(c0)) c0 = c;
    if (c0.empty()) throw std::logic_error("pair-split construction needs m = 2");

    for (const auto* fams : {&fam.cliques, &fam.stables})
        for (const VertexSet& c : *fams) h.add_edge(min_vertex(c), alpha);
    for (const VertexSet& pset : fam.primes) wire_prime_family(h, g, pset, {alpha});
    for (auto v = fam.singles.find_first(); v != VertexSet::npos;
         v = fam.singles.find_next(v))
        if (uniform_to(g, static_cast<int>(v), c0) == Uniformity::nonadjacent)
            h.add_edge(static_cast<int>(v), alpha);

    assert_added_extend_prime_families(h, n, fam.primes);

    nlohmann::json trace;
    trace["method"] = "power";
    trace["flip"] = false;
    trace["k"] = 1;
    trace["c0"] = to_vertex_list(c0);
    trace["attachments"] = attachments_json(h, n);
    return finish_extension(std::move(h), n, 1, BoundCase::power_non_iso,
                            std::move(trace));
}

}  // namespace detail

// Exact construction for m = 2^k without the isolated-class obstruction:
// remove one delegate from every maximum family, extend the rest with k
// vertices via the logarithmic construction, then re-attach each delegate on
// the one added-subset its family left unused.
inline ExtensionResult build_power_extension(const Graph& g, int k,
                                             const FamilyReport& fam) {
    if (k < 1) throw std::invalid_argument("power construction needs k >= 1");
    const int m = 1 << k;
    if (max_breakable_size(fam) != m)
        throw std::invalid_argument("breakable size is not 2^k");
    if (static_cast<int>(isolated_vertices(g).count()) == m ||
        static_cast<int>(isolated_vertices(complement(g)).count()) == m)
        throw std::invalid_argument(
            "an isolated class of size 2^k forces an extra vertex; use the "
            "logarithmic construction instead");

    if (k == 1) return detail::pair_split_core(g, fam);

    const int n = g.size();
    MaxFamilies mf = max_families(fam);
    VertexSet w(n);
    std::vector<std::pair<VertexSet, int>> delegated;
    for (const auto* fams : {&mf.cliques, &mf.stables})
        for (const VertexSet& c : *fams) {
            int d = min_vertex(c);
            w.set(d);
            delegated.emplace_back(c, d);
        }

    InducedSubgraph sub = induced_subgraph(g, g.vertex_set() & ~w);
    FamilyReport subfam = compute_families(sub.graph);
    const int msub = max_breakable_size(subfam);
    if (msub != m - 1)
        throw std::logic_error(
            "construction bug: delegate removal must leave breakable size 2^k - 1");
    ExtensionResult inner = build_mainone_extension(sub.graph, subfam, msub);
    if (inner.p != k)
        throw std::logic_error("construction bug: inner extension must add k vertices");

    const int n2 = sub.graph.size();
    Graph h = detail::extend_vertices(g, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n2; ++i)
            if (inner.h.has_edge(n2 + j, i)) h.add_edge(n + j, sub.to_parent[i]);
    for (int j1 = 0; j1 < k; ++j1)
        for (int j2 = j1 + 1; j2 < k; ++j2)
            if (inner.h.has_edge(n2 + j1, n2 + j2)) h.add_edge(n + j1, n + j2);

    // each family used all but one attachment subset; its delegate takes it
    nlohmann::json reattached = nlohmann::json::object();
    for (const auto& [c, d] : delegated) {
        std::vector<char> used(1u << k, 0);
        for (auto v = c.find_first(); v != VertexSet::npos; v = c.find_next(v)) {
            if (static_cast<int>(v) == d) continue;
            unsigned mask = 0;
            for (int j = 0; j < k; ++j)
                if (h.has_edge(static_cast<int>(v), n + j)) mask |= 1u << j;
            if (used[mask])
                throw std::logic_error(
                    "construction bug: duplicate attachment inside a maximum family");
            used[mask] = 1;
        }
        int missing = -1;
        for (int mask = 0; mask < (1 << k); ++mask)
            if (!used[mask]) {
                if (missing >= 0)
                    throw std::logic_error(
                        "construction bug: more than one unused attachment");
                missing = mask;
            }
        std::vector<int> nc;
        for (int j = 0; j < k; ++j)
            if (missing >> j & 1) {
                h.add_edge(d, n + j);
                nc.push_back(n + j);
            }
        reattached[std::to_string(d)] = nc;
    }

    nlohmann::json trace;
    trace["method"] = "power";
    trace["flip"] = false;
    trace["k"] = k;
    trace["w"] = to_vertex_list(w);
    trace["n_c"] = std::move(reattached);
    trace["inner"] = std::move(inner.trace);
    return detail::finish_extension(std::move(h), n, k, BoundCase::power_non_iso,
                                    std::move(trace));
}

// One-vertex construction for breakable graphs whose only families are prime
// modules: attach admissibly inside every prime module and disagree with a
// fixed reference module everywhere else.
inline ExtensionResult build_m1_extension(const Graph& g, const FamilyReport& fam) {
    if (!fam.cliques.empty() || !fam.stables.empty())
        throw std::invalid_argument("construction requires m = 1");
    if (is_prime(g)) throw std::invalid_argument("graph is already prime");
    if (fam.primes.empty())
        throw std::invalid_argument(
            "m = 1 on a breakable graph requires a prime module (n >= 4)");

    const int n = g.size();
    Graph h = detail::extend_vertices(g, 1);
    const int alpha = n;
    const VertexSet& p0 = fam.primes.front();

    for (const VertexSet& pset : fam.primes)
        detail::wire_prime_family(h, g, pset, {alpha});
    for (auto v = fam.singles.find_first(); v != VertexSet::npos;
         v = fam.singles.find_next(v))
        if (uniform_to(g, static_cast<int>(v), p0) == Uniformity::nonadjacent)
            h.add_edge(static_cast<int>(v), alpha);

    detail::assert_added_extend_prime_families(h, n, fam.primes);

    nlohmann::json trace;
    trace["method"] = "m1";
    trace["flip"] = false;
    trace["p0"] = to_vertex_list(p0);
    trace["attachments"] = detail::attachments_json(h, n);
    return detail::finish_extension(std::move(h), n, 1, BoundCase::m_one,
                                    std::move(trace));
}

// Builds a prime extension with exactly prime_bound(g) added vertices.
inline ExtensionResult build_prime_extension(const Graph& g) {
    const int n = g.size();
    ExtensionResult r;
    if (n == 0) {
        Graph h(4);
        for (int v = 0; v + 1 < 4; ++v) h.add_edge(v, v + 1);
        nlohmann::json trace{{"method", "tiny"}, {"flip", false}};
        r = detail::finish_extension(std::move(h), 0, 4, BoundCase::tiny,
                                     std::move(trace));
        return r;
    }

    FamilyReport fam = compute_families(g);
    BoundCertificate cert = prime_bound(g, fam);
    switch (cert.kind) {
        case BoundCase::already_prime: {
            nlohmann::json trace{{"method", "already_prime"}, {"flip", false}};
            r = detail::finish_extension(Graph(g), n, 0, cert.kind, std::move(trace));
            break;
        }
        case BoundCase::tiny: {
            // n = 1: grow the single vertex into a P4 endpoint
            Graph h = detail::extend_vertices(g, 3);
            for (int v = 0; v + 1 < 4; ++v) h.add_edge(v, v + 1);
            nlohmann::json trace{{"method", "tiny"}, {"flip", false}};
            r = detail::finish_extension(std::move(h), n, 3, cert.kind,
                                         std::move(trace));
            break;
        }
        case BoundCase::m_one:
            r = build_m1_extension(g, fam);
            break;
        case BoundCase::non_power:
        case BoundCase::power_iso:
            r = build_mainone_extension(g, fam, cert.m);
            break;
        case BoundCase::power_non_iso:
            r = build_power_extension(g, ceil_log2(cert.m), fam);
            break;
    }
    r.kind = cert.kind;
    if (r.p != cert.p || static_cast<int>(r.added.count()) != cert.p)
        throw std::logic_error("construction bug: added count disagrees with the bound");
    return r;
}

}  // namespace primebound
