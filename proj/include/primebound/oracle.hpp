#pragma once

// Brute-force ground truth for small graphs: module enumeration, an
// independent primality test, exhaustive extension search, exact clique and
// stability numbers, and extension verification.

#include "primebound/bound.hpp"
#include "primebound/builder.hpp"
#include "primebound/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace primebound {

struct OracleBudget {
    int max_vertices = 16;                    // cap for subset enumeration
    int max_added = 4;                        // cap on added vertices in the search
    long long max_candidates = 1'000'000'000; // cap on enumerated attachment patterns
};

class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Every module of g, trivial ones included, in increasing binary value.
inline std::vector<VertexSet> all_modules(const Graph& g,
                                          const OracleBudget& budget = {}) {
    const int n = g.size();
    if (n > budget.max_vertices)
        throw BudgetError("module enumeration over 2^n subsets refused for n = " +
                          std::to_string(n));
    std::vector<VertexSet> out;
    const unsigned long long total = 1ull << n;
    for (unsigned long long mask = 0; mask < total; ++mask) {
        VertexSet m(n);
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) m.set(v);
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            if (m.test(v)) continue;
            VertexSet hit = g.neighbors(v) & m;
            if (hit.any() && hit != m) ok = false;
        }
        if (ok) out.push_back(std::move(m));
    }
    return out;
}

// Stand-alone primality check: grow every vertex pair by splitter absorption;
// g is prime exactly when every pair saturates the whole vertex set.
inline bool oracle_is_prime(const Graph& g) {
    const int n = g.size();
    if (n < 4) return false;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            VertexSet inside(n);
            inside.set(u);
            inside.set(v);
            for (bool changed = true; changed;) {
                changed = false;
                VertexSet outside = ~inside;
                for (auto w = outside.find_first(); w != VertexSet::npos;
                     w = outside.find_next(w)) {
                    VertexSet common = g.neighbors(static_cast<int>(w)) & inside;
                    if (common.any() && common != inside) {
                        inside.set(w);
                        changed = true;
                    }
                }
            }
            if (static_cast<int>(inside.count()) < n) return false;
        }
    }
    return true;
}

// Smallest q such that some q-vertex extension of g is prime, by exhausting
// attachment patterns in increasing binary value.  Pattern bits: first the
// q blocks of n bits wiring each added vertex to the originals (original i at
// bit i), then the added-added pairs in lexicographic order.
inline int exhaustive_prime_bound(const Graph& g, const OracleBudget& budget = {}) {
    const int n = g.size();
    if (n > budget.max_vertices)
        throw BudgetError("exhaustive extension search refused for n = " +
                          std::to_string(n));
    long long seen = 0;
    for (int q = 0; q <= budget.max_added; ++q) {
        if (n + q < 4) continue;  // nothing prime below four vertices
        const int bits = q * n + q * (q - 1) / 2;
        if (bits >= 62)
            throw BudgetError("attachment pattern space does not fit in 62 bits");
        const long long total = 1ll << bits;
        for (long long pattern = 0; pattern < total; ++pattern) {
            if (++seen > budget.max_candidates)
                throw BudgetError("candidate budget exhausted after " +
                                  std::to_string(budget.max_candidates) +
                                  " patterns");
            Graph h(n + q);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (g.has_edge(u, v)) h.add_edge(u, v);
            bool degenerate = false;
            for (int a = 0; a < q && !degenerate; ++a) {
                long long row = pattern >> (a * n) & ((1ll << n) - 1);
                for (int i = 0; i < n; ++i)
                    if (row >> i & 1) h.add_edge(n + a, i);
            }
            int t = q * n;
            for (int a = 0; a < q; ++a)
                for (int b = a + 1; b < q; ++b, ++t)
                    if (pattern >> t & 1) h.add_edge(n + a, n + b);
            for (int a = 0; a < q; ++a)
                if (h.neighbors(n + a).none()) degenerate = true;  // isolated: never prime here
            if (degenerate) continue;
            if (oracle_is_prime(h)) return q;
        }
    }
    throw BudgetError("no prime extension with at most " +
                      std::to_string(budget.max_added) + " added vertices");
}

struct CliqueStability {
    int omega = 0;
    int alpha = 0;
};

namespace detail {

inline void max_clique_rec(const Graph& g, VertexSet cand, int have, int& best) {
    best = std::max(best, have);
    while (cand.any()) {
        if (have + static_cast<int>(cand.count()) <= best) return;
        const int v = static_cast<int>(cand.find_first());
        cand.reset(v);
        max_clique_rec(g, cand & g.neighbors(v), have + 1, best);
    }
}

}  // namespace detail

// Exact clique and stability numbers by branch and bound.
inline CliqueStability clique_and_stability_numbers(const Graph& g) {
    if (g.size() > 25)
        throw BudgetError("exact clique/stability computation refused for n = " +
                          std::to_string(g.size()));
    CliqueStability out;
    if (g.size() == 0) return out;
    detail::max_clique_rec(g, g.vertex_set(), 0, out.omega);
    Graph gc = complement(g);
    detail::max_clique_rec(gc, gc.vertex_set(), 0, out.alpha);
    return out;
}

struct VerifyResult {
    bool ok = true;
    std::vector<std::string> problems;
};

// Checks an extension result against its input graph: bookkeeping, the
// extension property, primality, and optimality of the added count.
inline VerifyResult verify_extension(const Graph& g, const ExtensionResult& r) {
    VerifyResult out;
    auto flag = [&](const std::string& msg) {
        out.ok = false;
        out.problems.push_back(msg);
    };

    const int n = g.size();
    const int total = r.h.size();
    VertexSet expected_original(total), expected_added(total);
    for (int v = 0; v < n && v < total; ++v) expected_original.set(v);
    for (int v = n; v < total; ++v) expected_added.set(v);
    if (total < n || r.original != expected_original || r.added != expected_added) {
        flag("vertex bookkeeping is inconsistent: originals must be ids 0..n-1 "
             "and added vertices the rest");
        return out;
    }

    if (induced_subgraph(r.h, r.original).graph != g)
        flag("extension property violated: h restricted to the original "
             "vertices differs from g");
    if (!oracle_is_prime(r.h)) flag("result graph is not prime");
    if (static_cast<int>(r.added.count()) != r.p)
        flag("added set size differs from the claimed p");

    BoundCertificate cert = prime_bound(g);
    if (r.p > cert.p)
        flag("added count exceeds the optimum p = " + std::to_string(cert.p));
    else if (r.p < cert.p)
        flag("claimed p is below the optimum p = " + std::to_string(cert.p) +
             "; no such extension can be prime");
    return out;
}

// Empirical check of the published logarithmic upper bound in terms of the
// plain clique and stability numbers.  The bound is asserted for graphs with
// at least two vertices; smaller inputs pass vacuously.
inline bool brignall_bound_check(const Graph& g, const BoundCertificate& cert) {
    if (g.size() < 2) return true;
    CliqueStability cs = clique_and_stability_numbers(g);
    return brignall_bound_holds(cert, cs.omega, cs.alpha);
}

}  // namespace primebound
