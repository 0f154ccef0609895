// Command-line front end: decompose graphs, report families and the prime
// bound, build and verify optimal prime extensions, and run the brute-force
// oracle.  Exit codes: 0 success, 1 input problems, 2 contract or budget
// violations (including failed verification).

#include "primebound/bound.hpp"
#include "primebound/builder.hpp"
#include "primebound/families.hpp"
#include "primebound/graph_io.hpp"
#include "primebound/json_report.hpp"
#include "primebound/moddecomp.hpp"
#include "primebound/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace primebound;

GraphFormat format_from_flag(const std::string& s) {
    if (s == "edge-list") return GraphFormat::edge_list;
    if (s == "graph6") return GraphFormat::graph6;
    if (s == "auto") return GraphFormat::autodetect;
    throw CLI::ValidationError("--format", "expected edge-list, graph6 or auto");
}

std::string set_display(const Graph& g, const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    for (int v : to_vertex_list(s)) {
        if (!first) out += ", ";
        out += g.display_name(v);
        first = false;
    }
    return out + "}";
}

void print_tree(std::ostream& os, const Graph& g, const StrongModuleTree& t,
                int node, int depth) {
    const auto& nd = t.node(node);
    os << std::string(2 * depth, ' ') << to_string(nd.label) << ' '
       << set_display(g, nd.vertices) << '\n';
    for (int c : nd.children) print_tree(os, g, t, c, depth + 1);
}

void emit(const std::string& command, const std::string& input, bool json_out,
          const nlohmann::json& payload, const std::string& human) {
    if (json_out) {
        nlohmann::json report;
        report["command"] = command;
        report["input"] = input;
        report["payload"] = payload;
        std::cout << report.dump(2) << '\n';
    } else {
        std::cout << human;
    }
}

int run(int argc, char** argv) {
    CLI::App app{"modular decomposition and exact prime extensions"};
    app.require_subcommand(1);

    std::string format_flag = "auto";
    bool json_out = false;
    unsigned seed = 0;  // reserved for randomized generators; nothing here uses it
    app.add_option("--format", format_flag, "input format: edge-list, graph6 or auto")
        ->capture_default_str();
    app.add_flag("--json", json_out, "emit a JSON run report on stdout");
    app.add_option("--seed", seed, "seed for randomized helpers (accepted, unused)");

    std::string in_path, extension_path, out_path;
    int max_added = 4;
    long long budget = 1'000'000'000;

    // let --format/--json/--seed appear after the subcommand as well
    app.fallthrough();

    CLI::App* c_decompose = app.add_subcommand("decompose", "print the strong module tree");
    c_decompose->add_option("graph", in_path, "input graph file")->required();

    CLI::App* c_families = app.add_subcommand("families", "report breakable families");
    c_families->add_option("graph", in_path, "input graph file")->required();

    CLI::App* c_bound = app.add_subcommand("bound", "compute the prime bound certificate");
    c_bound->add_option("graph", in_path, "input graph file")->required();

    CLI::App* c_extend = app.add_subcommand("extend", "build an optimal prime extension");
    c_extend->add_option("graph", in_path, "input graph file")->required();
    c_extend->add_option("--out", out_path, "write the extension's edge list to this file");

    CLI::App* c_verify = app.add_subcommand("verify", "check an extension result");
    c_verify->add_option("graph", in_path, "input graph file")->required();
    c_verify->add_option("extension", extension_path, "extension JSON file")->required();

    CLI::App* c_oracle = app.add_subcommand("oracle", "exhaustive prime bound search");
    c_oracle->add_option("graph", in_path, "input graph file")->required();
    c_oracle->add_option("--max-added", max_added, "largest number of added vertices to try")
        ->capture_default_str();
    c_oracle->add_option("--budget", budget, "cap on enumerated attachment patterns")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    const auto started = std::chrono::steady_clock::now();
    int status = 0;
    try {
        const Graph g = read_graph_file(in_path, format_from_flag(format_flag));

        if (app.got_subcommand(c_decompose)) {
            StrongModuleTree t = strong_module_tree(g);
            std::ostringstream human;
            print_tree(human, g, t, t.root(), 0);
            emit("decompose", in_path, json_out, tree_to_json(t), human.str());
        } else if (app.got_subcommand(c_families)) {
            FamilyReport rep = compute_families(g);
            std::ostringstream human;
            auto list = [&](const char* name, const std::vector<VertexSet>& sets) {
                human << name << ':';
                if (sets.empty()) human << " (none)";
                for (const VertexSet& s : sets) human << ' ' << set_display(g, s);
                human << '\n';
            };
            list("maximal clique modules", rep.cliques);
            list("maximal stable modules", rep.stables);
            list("prime modules", rep.primes);
            human << "unassigned vertices: " << set_display(g, rep.singles) << '\n';
            list("minimal-module classes", rep.approx_classes);
            list("twin classes", rep.twin_classes);
            emit("families", in_path, json_out, families_to_json(rep), human.str());
        } else if (app.got_subcommand(c_bound)) {
            BoundCertificate cert = prime_bound(g);
            std::ostringstream human;
            human << "p = " << cert.p << " (" << to_string(cert.kind) << ")\n"
                  << "m = " << cert.m << " (omega_m = " << cert.omega_m
                  << ", alpha_m = " << cert.alpha_m << ")\n"
                  << "isolated: " << cert.iso_g << " in g, " << cert.iso_gbar
                  << " in the complement\n"
                  << "witness: " << set_display(g, cert.witness) << '\n';
            emit("bound", in_path, json_out, certificate_to_json(cert), human.str());
        } else if (app.got_subcommand(c_extend)) {
            ExtensionResult r = build_prime_extension(g);
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                if (!out) throw std::runtime_error("cannot open output file: " + out_path);
                out << write_edge_list(r.h);
            }
            std::ostringstream human;
            human << "added " << r.p << " vertices (" << to_string(r.kind) << "): "
                  << set_display(r.h, r.added) << '\n';
            if (out_path.empty()) human << write_edge_list(r.h);
            human << r.trace.dump(2) << '\n';
            emit("extend", in_path, json_out, extension_to_json(r), human.str());
        } else if (app.got_subcommand(c_verify)) {
            std::ifstream ext_in(extension_path);
            if (!ext_in)
                throw std::runtime_error("cannot open input file: " + extension_path);
            nlohmann::json ext_json = nlohmann::json::parse(ext_in);
            // accept either the bare extension payload or a full run report
            if (ext_json.is_object() && ext_json.contains("payload"))
                ext_json = ext_json["payload"];
            ExtensionResult r = extension_from_json(ext_json);
            VerifyResult v = verify_extension(g, r);
            nlohmann::json payload;
            payload["ok"] = v.ok;
            payload["problems"] = v.problems;
            std::ostringstream human;
            if (v.ok) {
                human << "ok: prime extension with " << r.p << " added vertices\n";
            } else {
                for (const std::string& p : v.problems) human << "problem: " << p << '\n';
            }
            emit("verify", in_path, json_out, payload, human.str());
            if (!v.ok) status = 2;
        } else if (app.got_subcommand(c_oracle)) {
            OracleBudget b;
            b.max_added = max_added;
            b.max_candidates = budget;
            int p = exhaustive_prime_bound(g, b);
            nlohmann::json payload;
            payload["p"] = p;
            payload["max_added"] = b.max_added;
            std::ostringstream human;
            human << "p = " << p << " (exhaustive search)\n";
            emit("oracle", in_path, json_out, payload, human.str());
        }
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    std::cerr << "elapsed_ms=" << elapsed.count() << '\n';
    return status;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
