#include <algorithm>
#include <sstream>
#include <tuple>

#include "chipfire/errors.hpp"
#include "chipfire/graph.hpp"

namespace chipfire {

namespace {

struct RawGraph {
    bool directed = false;
    std::vector<std::string> labels;
    std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> edges;

    std::size_t intern(const std::string& l) {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == l) return i;
        labels.push_back(l);
        return labels.size() - 1;
    }
};

std::int64_t parse_multiplicity(const std::string& tok, int line) {
    std::size_t pos = 0;
    long long m = 0;
    try {
        m = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != tok.size() || tok.empty()) throw ParseError("bad multiplicity '" + tok + "'", line);
    if (m < 0) throw ParseError("negative multiplicity " + tok, line);
    if (m == 0) throw ParseError("multiplicity must be positive", line);
    return m;
}

RawGraph parse_raw(std::string_view text) {
    RawGraph raw;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    bool seen_content = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (toks.empty()) continue;
        if (toks[0] == "directed") {
            if (toks.size() != 1) throw ParseError("malformed directed flag", lineno);
            if (raw.directed) throw ParseError("duplicate directed flag", lineno);
            if (seen_content) throw ParseError("directed flag must precede all other lines", lineno);
            raw.directed = true;
            seen_content = true;
            continue;
        }
        seen_content = true;
        if (toks[0] == "vertex") {
            if (toks.size() != 2) throw ParseError("expected 'vertex <label>'", lineno);
            raw.intern(toks[1]);
            continue;
        }
        if (toks.size() < 2 || toks.size() > 3) throw ParseError("expected 'u v [m]'", lineno);
        if (toks[0] == toks[1]) throw ParseError("self-loop at '" + toks[0] + "'", lineno);
        std::int64_t m = toks.size() == 3 ? parse_multiplicity(toks[2], lineno) : 1;
        std::size_t u = raw.intern(toks[0]);
        std::size_t v = raw.intern(toks[1]);
        raw.edges.emplace_back(u, v, m);
    }
    return raw;
}

}  // namespace

AnyGraph parse_graph(std::string_view text) {
    RawGraph raw = parse_raw(text);
    if (raw.directed) {
        DirectedMultigraph g(raw.labels);
        for (auto [u, v, m] : raw.edges) g.add_arc(u, v, m);
        return g;
    }
    Multigraph g(raw.labels);
    for (auto [u, v, m] : raw.edges) g.add_edge(u, v, m);
    return g;
}

Multigraph parse_undirected(std::string_view text) {
    AnyGraph g = parse_graph(text);
    if (auto* u = std::get_if<Multigraph>(&g)) return std::move(*u);
    throw ParseError("expected an undirected graph");
}

std::string write_graph(const Multigraph& g) {
    std::vector<std::string> isolated;
    std::vector<std::tuple<std::string, std::string, std::int64_t>> edges;
    for (Vertex i = 0; i < g.size(); ++i) {
        if (g.degree(i) == 0) isolated.push_back(g.label(i));
        for (Vertex j = i + 1; j < g.size(); ++j) {
            if (g.mult(i, j) == 0) continue;
            const auto& a = g.label(i);
            const auto& b = g.label(j);
            if (a < b) edges.emplace_back(a, b, g.mult(i, j));
            else edges.emplace_back(b, a, g.mult(i, j));
        }
    }
    std::sort(isolated.begin(), isolated.end());
    std::sort(edges.begin(), edges.end());
    std::string out;
    for (const auto& l : isolated) out += "vertex " + l + "\n";
    for (const auto& [a, b, m] : edges) out += a + " " + b + " " + std::to_string(m) + "\n";
    return out;
}

std::string write_graph(const DirectedMultigraph& g) {
    std::vector<std::string> isolated;
    std::vector<std::tuple<std::string, std::string, std::int64_t>> arcs;
    for (Vertex i = 0; i < g.size(); ++i) {
        bool touched = false;
        for (Vertex j = 0; j < g.size(); ++j) {
            if (g.mult(i, j) > 0 || g.mult(j, i) > 0) touched = true;
            if (g.mult(i, j) > 0) arcs.emplace_back(g.label(i), g.label(j), g.mult(i, j));
        }
        if (!touched) isolated.push_back(g.label(i));
    }
    std::sort(isolated.begin(), isolated.end());
    std::sort(arcs.begin(), arcs.end());
    std::string out = "directed\n";
    for (const auto& l : isolated) out += "vertex " + l + "\n";
    for (const auto& [a, b, m] : arcs) out += a + " " + b + " " + std::to_string(m) + "\n";
    return out;
}

}  // namespace chipfire
