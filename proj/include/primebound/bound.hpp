#pragma once

// The prime bound p(g): the fewest vertices one must add to reach a prime
// supergraph that induces g back, decided exactly by case analysis on the
// modular clique/stability numbers.

#include "primebound/families.hpp"
#include "primebound/graph.hpp"
#include "primebound/moddecomp.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace primebound {

inline int ceil_log2(int m) {
    if (m < 1) throw std::invalid_argument("ceil_log2 needs a positive argument");
    return static_cast<int>(std::bit_width(static_cast<unsigned>(m) - 1u));
}

inline bool is_power_of_two(int m) { return m >= 1 && (m & (m - 1)) == 0; }

enum class BoundCase {
    already_prime,
    tiny,
    m_one,
    non_power,
    power_iso,
    power_non_iso,
};

inline const char* to_string(BoundCase c) {
    switch (c) {
        case BoundCase::already_prime: return "ALREADY_PRIME";
        case BoundCase::tiny: return "TINY";
        case BoundCase::m_one: return "M_ONE";
        case BoundCase::non_power: return "NON_POWER";
        case BoundCase::power_iso: return "POWER_ISO";
        case BoundCase::power_non_iso: return "POWER_NON_ISO";
    }
    return "?";
}

inline BoundCase bound_case_from_string(const std::string& s) {
    for (BoundCase c : {BoundCase::already_prime, BoundCase::tiny, BoundCase::m_one,
                        BoundCase::non_power, BoundCase::power_iso,
                        BoundCase::power_non_iso})
        if (s == to_string(c)) return c;
    throw std::invalid_argument("unknown bound case: " + s);
}

struct ModularNumbers {
    int omega_m = 1;  // largest clique module
    int alpha_m = 1;  // largest stable module
    int m = 1;        // max of the two
    VertexSet witness;
};

inline ModularNumbers modular_numbers(const Graph& g, const FamilyReport& rep) {
    if (g.size() < 1)
        throw std::invalid_argument("modular_numbers needs at least one vertex");
    ModularNumbers out;
    for (const VertexSet& c : rep.cliques)
        out.omega_m = std::max(out.omega_m, static_cast<int>(c.count()));
    for (const VertexSet& s : rep.stables)
        out.alpha_m = std::max(out.alpha_m, static_cast<int>(s.count()));
    out.m = std::max(out.omega_m, out.alpha_m);
    if (out.m == 1) {
        out.witness = make_vertex_set(g.size(), {0});
        return out;
    }
    // largest witness, ties broken by smallest minimum vertex id
    for (const auto* fams : {&rep.cliques, &rep.stables})
        for (const VertexSet& c : *fams) {
            if (static_cast<int>(c.count()) != out.m) continue;
            if (out.witness.empty() || out.witness.none() ||
                min_vertex(c) < min_vertex(out.witness))
                out.witness = c;
        }
    return out;
}

inline ModularNumbers modular_numbers(const Graph& g) {
    return modular_numbers(g, compute_families(g));
}

struct BoundCertificate {
    int p = 0;
    BoundCase kind = BoundCase::already_prime;
    int m = 0;
    int omega_m = 0;
    int alpha_m = 0;
    int iso_g = 0;     // isolated vertices of g
    int iso_gbar = 0;  // isolated vertices of the complement (dominating in g)
    VertexSet witness;
};

inline BoundCertificate prime_bound(const Graph& g, const FamilyReport& rep) {
    const int n = g.size();
    BoundCertificate cert;
    cert.witness = VertexSet(n);
    cert.iso_g = static_cast<int>(isolated_vertices(g).count());
    cert.iso_gbar = n == 0 ? 0 : static_cast<int>(isolated_vertices(complement(g)).count());

    if (n >= 1) {
        ModularNumbers mn = modular_numbers(g, rep);
        cert.m = mn.m;
        cert.omega_m = mn.omega_m;
        cert.alpha_m = mn.alpha_m;
        cert.witness = mn.witness;
    }

    if (is_prime(g)) {
        cert.p = 0;
        cert.kind = BoundCase::already_prime;
        return cert;
    }
    if (n <= 1) {
        // completing to the smallest prime graph, a P4, costs 4 - n vertices
        cert.p = 4 - n;
        cert.kind = BoundCase::tiny;
        return cert;
    }
    if (cert.m == 1) {
        // non-prime, no clique or stable module to exploit; n >= 4 is automatic
        // since every graph on 2 or 3 vertices has one
        if (n < 4)
            throw std::logic_error("prime bound bug: m = 1 on fewer than 4 vertices");
        cert.p = 1;
        cert.kind = BoundCase::m_one;
        return cert;
    }
    if (!is_power_of_two(cert.m)) {
        cert.p = ceil_log2(cert.m);
        cert.kind = BoundCase::non_power;
        return cert;
    }
    const int k = ceil_log2(cert.m);  // m = 2^k
    if (cert.iso_g == cert.m || cert.iso_gbar == cert.m) {
        cert.p = k + 1;
        cert.kind = BoundCase::power_iso;
    } else {
        cert.p = k;
        cert.kind = BoundCase::power_non_iso;
    }
    return cert;
}

inline BoundCertificate prime_bound(const Graph& g) {
    if (g.size() == 0) {
        BoundCertificate cert;
        cert.p = 4;
        cert.kind = BoundCase::tiny;
        return cert;
    }
    return prime_bound(g, compute_families(g));
}

// Published upper bound per-certificate check: p <= ceil(log2(max(omega,
// alpha) + 1)) for the plain clique and stability numbers of the graph.
inline bool brignall_bound_holds(const BoundCertificate& cert, int omega, int alpha) {
    return cert.p <= ceil_log2(std::max(omega, alpha) + 1);
}

}  // namespace primebound
