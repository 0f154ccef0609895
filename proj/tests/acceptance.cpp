// Acceptance gate: one self-contained check per shipping criterion, one
// PASS/FAIL line each, exit code = number of failures.

#include "primebound/bound.hpp"
#include "primebound/builder.hpp"
#include "primebound/families.hpp"
#include "primebound/graph.hpp"
#include "primebound/graph_io.hpp"
#include "primebound/moddecomp.hpp"
#include "primebound/oracle.hpp"

#include "test_helpers.hpp"

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace primebound;

namespace {

int failures = 0;

void report(int idx, bool ok, const std::string& what) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << idx << ": " << what
              << std::endl;
    if (!ok) ++failures;
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

std::string round1(double x) {
    std::ostringstream out;
    out.precision(1);
    out << std::fixed << x;
    return out.str();
}

struct SweepEntry {
    Graph g{0};
    BoundCertificate cert;
    int oracle_p = 0;
};

// every labeled graph on at most five vertices, with certificate and
// brute-force answer; shared by criteria 3, 5 and 8
std::vector<SweepEntry> full_sweep() {
    std::vector<SweepEntry> out;
    for (int n = 0; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
            SweepEntry e;
            e.g = testutil::graph_from_mask(n, mask);
            e.cert = prime_bound(e.g);
            e.oracle_p = exhaustive_prime_bound(e.g);
            out.push_back(std::move(e));
        }
    }
    return out;
}

void criterion_1() {
    Timer t;
    Graph g = read_graph_file(testutil::data_file("demo.txt"));
    StrongModuleTree tree = strong_module_tree(g);

    const VertexSet c = make_vertex_set(10, {2, 3, 4});
    const VertexSet s = make_vertex_set(10, {5, 6, 7, 8, 9});
    const VertexSet ab = make_vertex_set(10, {0, 1});

    bool ok = true;
    int internal = 0;
    for (const auto& node : tree.nodes) {
        if (node.children.empty()) continue;
        ++internal;
        if (node.vertices == c)
            ok = ok && node.label == NodeLabel::complete;
        else if (node.vertices == s)
            ok = ok && node.label == NodeLabel::empty;
        else if (node.vertices == g.vertex_set())
            ok = ok && node.label == NodeLabel::prime;
        else
            ok = false;
    }
    ok = ok && internal == 3;

    FamilyReport rep = compute_families(g);
    ok = ok && rep.cliques == std::vector<VertexSet>{c};
    ok = ok && rep.stables == std::vector<VertexSet>{s};
    ok = ok && rep.primes.empty();
    ok = ok && rep.singles == ab;
    ok = ok && rep.twin_classes == std::vector<VertexSet>{ab, c, s};
    ok = ok && t.seconds() < 1.0;
    report(1, ok,
           "showcase decomposition: internal nodes {C,S,V} labeled "
           "complete/empty/prime, families and twin classes exact (" +
               round1(t.seconds()) + " s)");
}

void criterion_2() {
    Timer t;
    Graph g = read_graph_file(testutil::data_file("demo.txt"));
    BoundCertificate cert = prime_bound(g);
    ExtensionResult r = build_prime_extension(g);
    bool ok = cert.p == 3 && cert.kind == BoundCase::non_power;
    ok = ok && r.p == 3 && r.added.count() == 3;
    ok = ok && verify_extension(g, r).ok;
    ok = ok && t.seconds() < 1.0;
    report(2, ok,
           "showcase bound p=3 with a verified 3-vertex extension (" +
               round1(t.seconds()) + " s)");
}

void criterion_3(const std::vector<SweepEntry>& sweep) {
    Timer t;
    bool ok = true;
    for (const SweepEntry& e : sweep)
        if (e.cert.p != e.oracle_p) {
            ok = false;
            std::cerr << "  mismatch on " << write_graph6(e.g) << ": case analysis "
                      << e.cert.p << ", search " << e.oracle_p << "\n";
        }

    std::mt19937 rng(31);
    int sampled = 0;
    for (; sampled < 2000 && ok; ++sampled) {
        Graph g = testutil::random_graph(rng, 6);
        if (prime_bound(g).p != exhaustive_prime_bound(g)) {
            ok = false;
            std::cerr << "  sampled mismatch on " << write_graph6(g) << "\n";
        }
    }
    ok = ok && t.seconds() < 300.0;
    report(3, ok,
           "case analysis matches exhaustive search on all " +
               std::to_string(sweep.size()) + " graphs with n <= 5 and " +
               std::to_string(sampled) + " random graphs with n = 6 (" +
               round1(t.seconds()) + " s)");
}

void criterion_4() {
    std::vector<Graph> primes;
    for (int n = 4; n <= 9; ++n) primes.push_back(testutil::path_graph(n));
    std::mt19937 rng(41);
    while (primes.size() < 20) {
        int n = 4 + static_cast<int>(rng() % 6);
        Graph g = testutil::random_graph(rng, n, 0.5);
        if (oracle_is_prime(g)) primes.push_back(g);
    }

    bool ok = true;
    for (const Graph& g : primes) {
        const int n = g.size();
        std::vector<VertexSet> adm = prime_one_extension_neighborhoods(g);
        if (adm.size() != (std::size_t{1} << n) - 2 * n - 2) {
            ok = false;
            std::cerr << "  wrong count on " << write_graph6(g) << "\n";
            continue;
        }
        for (const VertexSet& nb : adm) {
            Graph h(n + 1);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (g.has_edge(u, v)) h.add_edge(u, v);
            for (auto v = nb.find_first(); v != VertexSet::npos; v = nb.find_next(v))
                h.add_edge(n, static_cast<int>(v));
            if (!oracle_is_prime(h)) {
                ok = false;
                std::cerr << "  non-prime extension of " << write_graph6(g) << "\n";
                break;
            }
        }
    }
    report(4, ok,
           "on " + std::to_string(primes.size()) +
               " prime graphs (paths and random) the admissible one-vertex "
               "attachments number 2^n-2n-2 and all stay prime");
}

void criterion_5(const std::vector<SweepEntry>& sweep) {
    bool ok = true;
    int covered = 0;
    for (const SweepEntry& e : sweep) {
        if (e.g.size() < 2 || !is_power_of_two(e.cert.m)) continue;
        ++covered;
        const int k = ceil_log2(e.cert.m);
        const bool iso_hit = e.cert.iso_g == e.cert.m || e.cert.iso_gbar == e.cert.m;
        if ((e.oracle_p == k + 1) != iso_hit || (!iso_hit && e.oracle_p != k)) {
            ok = false;
            std::cerr << "  dichotomy fails on " << write_graph6(e.g) << "\n";
        }
    }
    report(5, ok,
           "power-of-two dichotomy: p = k+1 exactly for an isolated class of "
           "size 2^k, over " + std::to_string(covered) + " sweep graphs");
}

void criterion_6() {
    std::mt19937 rng(61);
    bool ok = true;
    for (int trial = 0; trial < 500 && ok; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = testutil::random_graph(rng, n);
        Graph gc = complement(g);
        if (prime_bound(g).p != prime_bound(gc).p || all_modules(g) != all_modules(gc)) {
            ok = false;
            std::cerr << "  complement asymmetry on " << write_graph6(g) << "\n";
        }
    }
    report(6, ok,
           "complement symmetry of the bound and of the module sets on 500 "
           "random graphs with n <= 10");
}

void criterion_7() {
    std::mt19937 rng(71);
    bool ok = true;
    int done = 0;
    while (done < 500 && ok) {
        int n = 2 + static_cast<int>(rng() % 11);
        Graph g = testutil::random_graph(rng, n);
        BoundCertificate cert = prime_bound(g);
        if (cert.m < 2) continue;
        ++done;
        if (cert.p < ceil_log2(cert.m) || cert.p > ceil_log2(cert.m + 1)) {
            ok = false;
            std::cerr << "  sandwich fails on " << write_graph6(g) << "\n";
        }
        int iso = std::max(cert.iso_g, cert.iso_gbar);
        if (iso > 0 && cert.p < ceil_log2(iso + 1)) {
            ok = false;
            std::cerr << "  isolated lower bound fails on " << write_graph6(g) << "\n";
        }
    }
    report(7, ok,
           "log2 sandwich and isolated-class lower bound on 500 random graphs "
           "with n <= 12 and m >= 2");
}

void criterion_8(const std::vector<SweepEntry>& sweep) {
    bool ok = true;
    for (const SweepEntry& e : sweep) {
        if (e.g.size() < 2) continue;
        CliqueStability cs = clique_and_stability_numbers(e.g);
        if (!brignall_bound_holds(e.cert, cs.omega, cs.alpha)) {
            ok = false;
            std::cerr << "  upper bound fails on " << write_graph6(e.g) << "\n";
        }
    }
    report(8, ok,
           "p <= ceil(log2(max(omega, alpha)+1)) across the full n <= 5 sweep");
}

void criterion_9() {
    Timer t;
    std::mt19937 rng(91);
    bool ok = true;
    for (int trial = 0; trial < 200 && ok; ++trial) {
        int n = static_cast<int>(rng() % 41);
        Graph g = testutil::random_graph(rng, n);
        BoundCertificate cert = prime_bound(g);
        ExtensionResult r = build_prime_extension(g);
        if (static_cast<int>(r.added.count()) != cert.p || !is_prime(r.h)) {
            ok = false;
            std::cerr << "  unsound extension on " << write_graph6(g) << "\n";
        }
    }
    ok = ok && t.seconds() < 120.0;
    report(9, ok,
           "200 random graphs with n <= 40 get prime extensions of exactly the "
           "certified size (" + round1(t.seconds()) + " s)");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    std::vector<SweepEntry> sweep = full_sweep();
    criterion_3(sweep);
    criterion_4();
    criterion_5(sweep);
    criterion_6();
    criterion_7();
    criterion_8(sweep);
    criterion_9();
    std::cout << (failures == 0 ? "all criteria passed" : "failures: " +
                  std::to_string(failures)) << std::endl;
    return failures;
}
