#pragma once

// JSON shapes for the library's results.  Everything here is deterministic:
// equal inputs serialize to byte-identical strings.

#include "primebound/bound.hpp"
#include "primebound/builder.hpp"
#include "primebound/families.hpp"
#include "primebound/graph_io.hpp"
#include "primebound/moddecomp.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace primebound {

inline nlohmann::json vertex_set_to_json(const VertexSet& s) {
    return to_vertex_list(s);
}

inline nlohmann::json vertex_sets_to_json(const std::vector<VertexSet>& sets) {
    nlohmann::json arr = nlohmann::json::array();
    for (const VertexSet& s : sets) arr.push_back(vertex_set_to_json(s));
    return arr;
}

inline nlohmann::json tree_to_json(const StrongModuleTree& t, int node) {
    const auto& nd = t.node(node);
    nlohmann::json out;
    out["vertices"] = vertex_set_to_json(nd.vertices);
    out["label"] = to_string(nd.label);
    nlohmann::json kids = nlohmann::json::array();
    for (int c : nd.children) kids.push_back(tree_to_json(t, c));
    out["children"] = std::move(kids);
    return out;
}

inline nlohmann::json tree_to_json(const StrongModuleTree& t) {
    return tree_to_json(t, t.root());
}

inline nlohmann::json families_to_json(const FamilyReport& rep) {
    nlohmann::json out;
    out["cliques"] = vertex_sets_to_json(rep.cliques);
    out["stables"] = vertex_sets_to_json(rep.stables);
    out["primes"] = vertex_sets_to_json(rep.primes);
    out["singles"] = vertex_set_to_json(rep.singles);
    out["approx_classes"] = vertex_sets_to_json(rep.approx_classes);
    out["twin_classes"] = vertex_sets_to_json(rep.twin_classes);
    return out;
}

inline nlohmann::json certificate_to_json(const BoundCertificate& cert) {
    nlohmann::json out;
    out["p"] = cert.p;
    out["case"] = to_string(cert.kind);
    out["m"] = cert.m;
    out["omega_m"] = cert.omega_m;
    out["alpha_m"] = cert.alpha_m;
    out["iso_g"] = cert.iso_g;
    out["iso_gbar"] = cert.iso_gbar;
    out["witness"] = vertex_set_to_json(cert.witness);
    return out;
}

inline nlohmann::json extension_to_json(const ExtensionResult& r) {
    nlohmann::json out;
    out["p"] = r.p;
    out["case"] = to_string(r.kind);
    out["added"] = vertex_set_to_json(r.added);
    out["trace"] = r.trace;
    out["graph"] = write_edge_list(r.h);
    return out;
}

inline ExtensionResult extension_from_json(const nlohmann::json& j) {
    ExtensionResult r;
    r.h = parse_edge_list(j.at("graph").get<std::string>());
    r.p = j.at("p").get<int>();
    r.kind = bound_case_from_string(j.at("case").get<std::string>());
    r.trace = j.value("trace", nlohmann::json::object());
    r.added = VertexSet(r.h.size());
    for (int v : j.at("added").get<std::vector<int>>()) {
        if (v < 0 || v >= r.h.size())
            throw std::invalid_argument("added vertex id out of range");
        r.added.set(v);
    }
    r.original = ~r.added;
    return r;
}

}  // namespace primebound
