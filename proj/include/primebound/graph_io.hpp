#pragma once

// Reading and writing graphs: whitespace edge lists and graph6 strings.

#include "primebound/graph.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace primebound {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_ = 0;
};

enum class GraphFormat { edge_list, graph6, autodetect };

namespace detail {

inline bool parse_int(const std::string& tok, int& out) {
    if (tok.empty()) return false;
    std::size_t i = (tok[0] == '-') ? 1 : 0;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    try {
        out = std::stoi(tok);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

}  // namespace detail

// Edge-list format: a header line "n m", then m lines "u v" with
// 0 <= u,v < n and u != v.  '#' starts a comment; a comment of the form
// "# names: a b c ..." (after the header) attaches display names.
// Duplicate edges collapse.
inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool have_header = false;
    int n = 0, m = 0, edges_seen = 0;
    Graph g(0);
    std::vector<std::string> names;
    int names_line = 0;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            std::string comment = line.substr(hash + 1);
            line.resize(hash);
            auto toks = detail::split_ws(comment);
            if (!toks.empty() && toks[0] == "names:") {
                if (!have_header)
                    throw ParseError("names directive before the header", lineno);
                if (!names.empty())
                    throw ParseError("duplicate names directive", lineno);
                names.assign(toks.begin() + 1, toks.end());
                names_line = lineno;
            }
        }
        auto toks = detail::split_ws(line);
        if (toks.empty()) continue;
        if (toks.size() != 2)
            throw ParseError(have_header ? "expected exactly two vertex ids"
                                         : "malformed header, expected \"n m\"",
                             lineno);
        int a = 0, b = 0;
        if (!detail::parse_int(toks[0], a) || !detail::parse_int(toks[1], b))
            throw ParseError(have_header ? "vertex ids must be integers"
                                         : "malformed header, expected \"n m\"",
                             lineno);
        if (!have_header) {
            if (a < 0 || b < 0)
                throw ParseError("vertex and edge counts must be non-negative", lineno);
            n = a;
            m = b;
            g = Graph(n);
            have_header = true;
            continue;
        }
        if (edges_seen == m)
            throw ParseError("more edge lines than the declared edge count", lineno);
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw ParseError("vertex id out of range (n = " + std::to_string(n) + ")",
                             lineno);
        if (a == b) throw ParseError("self-loops are not allowed", lineno);
        g.add_edge(a, b);
        ++edges_seen;
    }
    if (!have_header) throw ParseError("missing header line \"n m\"", lineno == 0 ? 1 : lineno);
    if (edges_seen < m)
        throw ParseError("expected " + std::to_string(m) + " edges, found " +
                             std::to_string(edges_seen),
                         lineno == 0 ? 1 : lineno);
    if (!names.empty()) {
        if (static_cast<int>(names.size()) != n)
            throw ParseError("names directive must list exactly " + std::to_string(n) +
                                 " names",
                             names_line);
        g.set_names(names);
    }
    return g;
}

// graph6: single-byte size form only (n <= 62).  Edge bits run over the
// upper triangle column by column ((0,1),(0,2),(1,2),(0,3),...), packed
// six per character, most significant bit first, each character offset by 63.
inline Graph parse_graph6(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (c == '\n' || c == '\r' || c == ' ' || c == '\t') {
            if (!s.empty()) break;  // one graph per string
            continue;
        }
        s.push_back(c);
    }
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s.erase(0, header.size());
    if (s.empty()) throw ParseError("empty graph6 string", 1);
    unsigned char first = static_cast<unsigned char>(s[0]);
    if (first == 126)
        throw ParseError("multi-byte graph6 sizes (n > 62) are not supported", 1);
    if (first < 63 || first > 125)
        throw ParseError("invalid graph6 size character", 1);
    const int n = first - 63;
    const int bits = n * (n - 1) / 2;
    const int bytes = (bits + 5) / 6;
    if (static_cast<int>(s.size()) != 1 + bytes)
        throw ParseError("graph6 string has wrong length for n = " + std::to_string(n),
                         1);
    Graph g(n);
    int k = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++k) {
            unsigned char c = static_cast<unsigned char>(s[1 + k / 6]);
            if (c < 63 || c > 126)
                throw ParseError("invalid graph6 data character", 1);
            if ((c - 63) >> (5 - k % 6) & 1) g.add_edge(row, col);
        }
    }
    return g;
}

inline GraphFormat sniff_format(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        auto toks = detail::split_ws(line);
        if (toks.empty()) continue;
        if (toks[0].rfind(">>graph6<<", 0) == 0) return GraphFormat::graph6;
        int a = 0, b = 0;
        if (toks.size() == 2 && detail::parse_int(toks[0], a) &&
            detail::parse_int(toks[1], b))
            return GraphFormat::edge_list;
        return GraphFormat::graph6;
    }
    return GraphFormat::edge_list;  // empty input: let the edge-list parser complain
}

inline Graph parse_graph(const std::string& text,
                         GraphFormat fmt = GraphFormat::autodetect) {
    if (fmt == GraphFormat::autodetect) fmt = sniff_format(text);
    return fmt == GraphFormat::graph6 ? parse_graph6(text) : parse_edge_list(text);
}

inline std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.size() << ' ' << g.edge_count() << '\n';
    if (g.has_names()) {
        out << "# names:";
        for (const std::string& name : g.names()) out << ' ' << name;
        out << '\n';
    }
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (g.has_edge(u, v)) out << u << ' ' << v << '\n';
    return out.str();
}

inline std::string write_graph6(const Graph& g) {
    const int n = g.size();
    if (n > 62)
        throw std::invalid_argument("graph6 output supports at most 62 vertices");
    std::string s(1, static_cast<char>(63 + n));
    int k = 0;
    char cur = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++k) {
            if (g.has_edge(row, col)) cur |= 1 << (5 - k % 6);
            if (k % 6 == 5) {
                s.push_back(static_cast<char>(63 + cur));
                cur = 0;
            }
        }
    }
    if (k % 6 != 0) s.push_back(static_cast<char>(63 + cur));
    return s;
}

inline Graph read_graph_file(const std::string& path,
                             GraphFormat fmt = GraphFormat::autodetect) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str(), fmt);
}

}  // namespace primebound
