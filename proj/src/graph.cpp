#include "chipfire/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "chipfire/errors.hpp"

namespace chipfire {

std::optional<Vertex> LabelledTable::find(std::string_view label) const {
    for (Vertex v = 0; v < labels_.size(); ++v)
        if (labels_[v] == label) return v;
    return std::nullopt;
}

Vertex LabelledTable::index_of(std::string_view label) const {
    if (auto v = find(label)) return *v;
    throw DomainError("no vertex labelled '" + std::string(label) + "'");
}

Vertex LabelledTable::add_vertex(std::string label) {
    if (find(label)) throw DomainError("duplicate vertex label '" + label + "'");
    const std::size_t n = size();
    std::vector<std::int64_t> grown((n + 1) * (n + 1), 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) grown[i * (n + 1) + j] = mult_[i * n + j];
    mult_ = std::move(grown);
    labels_.push_back(std::move(label));
    return n;
}

void LabelledTable::check_vertex(Vertex v) const {
    if (v >= size()) throw DomainError("vertex index " + std::to_string(v) + " out of range");
}

Multigraph::Multigraph(std::vector<std::string> labels) {
    for (auto& l : labels) add_vertex(std::move(l));
}

Multigraph Multigraph::with_vertices(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));
    return Multigraph(std::move(labels));
}

void Multigraph::add_edge(Vertex u, Vertex v, std::int64_t m) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw DomainError("self-loop at '" + label(u) + "'");
    if (m < 0) throw DomainError("negative edge multiplicity");
    at(u, v) += m;
    at(v, u) += m;
}

void Multigraph::set_mult(Vertex u, Vertex v, std::int64_t m) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw DomainError("self-loop at '" + label(u) + "'");
    if (m < 0) throw DomainError("negative edge multiplicity");
    at(u, v) = m;
    at(v, u) = m;
}

std::int64_t Multigraph::degree(Vertex v) const {
    check_vertex(v);
    std::int64_t d = 0;
    for (Vertex w = 0; w < size(); ++w) d += mult(v, w);
    return d;
}

std::vector<Vertex> Multigraph::neighbors(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> out;
    for (Vertex w = 0; w < size(); ++w)
        if (mult(v, w) > 0) out.push_back(w);
    return out;
}

std::int64_t Multigraph::edge_count() const {
    std::int64_t e = 0;
    for (Vertex i = 0; i < size(); ++i)
        for (Vertex j = i + 1; j < size(); ++j) e += mult(i, j);
    return e;
}

std::vector<std::pair<Vertex, Vertex>> Multigraph::edge_units() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex i = 0; i < size(); ++i)
        for (Vertex j = i + 1; j < size(); ++j)
            for (std::int64_t k = 0; k < mult(i, j); ++k) out.emplace_back(i, j);
    return out;
}

DirectedMultigraph::DirectedMultigraph(std::vector<std::string> labels) {
    for (auto& l : labels) add_vertex(std::move(l));
}

void DirectedMultigraph::add_arc(Vertex from, Vertex to, std::int64_t m) {
    check_vertex(from);
    check_vertex(to);
    if (from == to) throw DomainError("self-loop at '" + label(from) + "'");
    if (m < 0) throw DomainError("negative arc multiplicity");
    at(from, to) += m;
}

std::int64_t DirectedMultigraph::out_degree(Vertex v) const {
    check_vertex(v);
    std::int64_t d = 0;
    for (Vertex w = 0; w < size(); ++w) d += mult(v, w);
    return d;
}

IntegerMatrix laplacian(const Multigraph& g) {
    const std::size_t n = g.size();
    IntegerMatrix l(n, n);
    for (Vertex i = 0; i < n; ++i) {
        std::int64_t d = 0;
        for (Vertex j = 0; j < n; ++j) {
            if (i == j) continue;
            d += g.mult(i, j);
            l(i, j) = big(-g.mult(i, j));
        }
        l(i, i) = big(d);
    }
    return l;
}

IntegerMatrix directed_laplacian(const DirectedMultigraph& g) {
    const std::size_t n = g.size();
    IntegerMatrix l(n, n);
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = 0; j < n; ++j)
            if (i != j) l(i, j) = big(-g.mult(i, j));
        l(i, i) = big(g.out_degree(i));
    }
    return l;
}

IntegerMatrix reduced_laplacian(const Multigraph& g, Vertex row, Vertex col) {
    if (row >= g.size() || col >= g.size()) throw DomainError("reduced_laplacian: index out of range");
    return laplacian(g).minor_matrix(row, col);
}

IntegerMatrix adjacency(const Multigraph& g) {
    const std::size_t n = g.size();
    IntegerMatrix a(n, n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j) a(i, j) = big(g.mult(i, j));
    return a;
}

std::vector<std::vector<Vertex>> connected_components(const Multigraph& g) {
    const std::size_t n = g.size();
    std::vector<int> seen(n, 0);
    std::vector<std::vector<Vertex>> parts;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> part;
        std::deque<Vertex> queue{s};
        seen[s] = 1;
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            part.push_back(v);
            for (Vertex w = 0; w < n; ++w)
                if (g.mult(v, w) > 0 && !seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    return parts;
}

bool is_connected(const Multigraph& g) {
    return g.size() > 0 && connected_components(g).size() == 1;
}

std::int64_t genus(const Multigraph& g) {
    if (!is_connected(g)) throw GraphError("genus is defined for connected graphs only");
    return g.edge_count() - static_cast<std::int64_t>(g.size()) + 1;
}

namespace {

// First label prefix+k (k = 1, 2, ...) not already used in g.
std::string fresh_label(const LabelledTable& g, const std::string& prefix, std::size_t& counter) {
    while (true) {
        std::string l = prefix + std::to_string(++counter);
        if (!g.find(l)) return l;
    }
}

void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

}  // namespace

namespace family {

Multigraph path(std::size_t n) {
    require(n >= 1, "path needs at least one vertex");
    Multigraph g = Multigraph::with_vertices(n);
    for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Multigraph cycle(std::size_t n) {
    require(n >= 2, "cycle needs at least two vertices");
    Multigraph g = Multigraph::with_vertices(n);
    for (Vertex i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Multigraph complete(std::size_t n) {
    require(n >= 1, "complete graph needs at least one vertex");
    Multigraph g = Multigraph::with_vertices(n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Multigraph complete_bipartite(std::size_t m, std::size_t n) {
    require(m >= 1 && n >= 1, "complete bipartite graph needs nonempty parts");
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= m; ++i) labels.push_back("x" + std::to_string(i));
    for (std::size_t j = 1; j <= n; ++j) labels.push_back("y" + std::to_string(j));
    Multigraph g(std::move(labels));
    for (Vertex i = 0; i < m; ++i)
        for (Vertex j = 0; j < n; ++j) g.add_edge(i, m + j);
    return g;
}

Multigraph star(std::size_t n) {
    require(n >= 1, "star needs at least one leaf");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i <= n; ++i) labels.push_back("v" + std::to_string(i));
    Multigraph g(std::move(labels));
    for (Vertex i = 1; i <= n; ++i) g.add_edge(0, i);
    return g;
}

Multigraph circulant(std::size_t n, const std::vector<std::size_t>& offsets) {
    require(n >= 2, "circulant graph needs at least two vertices");
    require(!offsets.empty(), "circulant graph needs at least one offset");
    std::vector<std::size_t> sorted = offsets;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), "circulant offsets must be distinct");
    Multigraph g = Multigraph::with_vertices(n);
    for (std::size_t a : sorted) {
        require(a >= 1 && 2 * a <= n, "circulant offset " + std::to_string(a) + " outside 1.." + std::to_string(n / 2));
        for (Vertex i = 0; i < n; ++i) {
            // the antipodal chord is a single edge
            if (2 * a == n && i >= n / 2) continue;
            g.add_edge(i, (i + a) % n);
        }
    }
    return g;
}

Multigraph house() {
    Multigraph g = Multigraph::with_vertices(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    g.add_edge(2, 4);
    g.add_edge(3, 4);
    return g;
}

Multigraph diamond() {
    Multigraph g = Multigraph::with_vertices(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    return g;
}

Multigraph from_spec(std::string_view spec) {
    std::istringstream in{std::string(spec)};
    std::string kind;
    in >> kind;
    std::vector<std::size_t> args;
    for (std::string tok; in >> tok;) {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != tok.size() || v < 0) throw DomainError("bad family parameter '" + tok + "'");
        args.push_back(static_cast<std::size_t>(v));
    }
    auto want = [&](std::size_t k) {
        if (args.size() != k) throw DomainError("family '" + kind + "' takes " + std::to_string(k) + " parameter(s)");
    };
    if (kind == "path") return want(1), path(args[0]);
    if (kind == "cycle") return want(1), cycle(args[0]);
    if (kind == "complete") return want(1), complete(args[0]);
    if (kind == "complete_bipartite") return want(2), complete_bipartite(args[0], args[1]);
    if (kind == "star") return want(1), star(args[0]);
    if (kind == "house") return want(0), house();
    if (kind == "diamond") return want(0), diamond();
    if (kind == "circulant") {
        if (args.size() < 2) throw DomainError("circulant takes n and at least one offset");
        return circulant(args[0], std::vector<std::size_t>(args.begin() + 1, args.end()));
    }
    throw DomainError("unknown graph family '" + kind + "'");
}

}  // namespace family

Multigraph wedge(const Multigraph& g1, Vertex v1, const Multigraph& g2, Vertex v2) {
    require(v1 < g1.size() && v2 < g2.size(), "wedge: vertex out of range");
    Multigraph out = g1;
    std::vector<Vertex> map(g2.size());
    for (Vertex w = 0; w < g2.size(); ++w) {
        if (w == v2) {
            map[w] = v1;
            continue;
        }
        std::string l = g2.label(w);
        while (out.find(l)) l += "'";
        map[w] = out.add_vertex(l);
    }
    for (Vertex i = 0; i < g2.size(); ++i)
        for (Vertex j = i + 1; j < g2.size(); ++j)
            if (g2.mult(i, j) > 0) out.add_edge(map[i], map[j], g2.mult(i, j));
    return out;
}

Multigraph subdivide(const Multigraph& g, std::size_t k, std::optional<std::pair<Vertex, Vertex>> edge) {
    require(k >= 1, "subdivide: k must be at least 1");
    Multigraph out = g;
    if (k == 1) {
        if (edge) require(edge->first < g.size() && edge->second < g.size() && g.mult(edge->first, edge->second) > 0,
                          "subdivide: no such edge");
        return out;
    }
    std::size_t counter = 0;
    auto replace = [&](Vertex u, Vertex v) {
        out.set_mult(u, v, out.mult(u, v) - 1);
        Vertex prev = u;
        for (std::size_t s = 1; s < k; ++s) {
            Vertex mid = out.add_vertex(fresh_label(out, "s", counter));
            out.add_edge(prev, mid);
            prev = mid;
        }
        out.add_edge(prev, v);
    };
    if (edge) {
        auto [u, v] = *edge;
        require(u < g.size() && v < g.size() && u != v && g.mult(u, v) > 0, "subdivide: no such edge");
        replace(u, v);
    } else {
        for (auto [u, v] : g.edge_units()) replace(u, v);
    }
    return out;
}

Multigraph cone(const Multigraph& g, std::size_t m) {
    require(m >= 1, "cone: m must be at least 1");
    Multigraph out = g;
    const std::size_t n = g.size();
    std::size_t counter = 0;
    for (std::size_t i = 0; i < m; ++i) out.add_vertex(fresh_label(out, "c", counter));
    for (Vertex a = n; a < n + m; ++a) {
        for (Vertex v = 0; v < a; ++v) out.add_edge(v, a);
    }
    return out;
}

Multigraph toggle_edge(const Multigraph& g, Vertex x, Vertex y) {
    require(x < g.size() && y < g.size(), "toggle_edge: vertex out of range");
    require(x != y, "toggle_edge: x and y must differ");
    const std::int64_t m = g.mult(x, y);
    require(m <= 1, "toggle_edge: pair {" + g.label(x) + ", " + g.label(y) + "} has multiplicity " +
                        std::to_string(m));
    Multigraph out = g;
    out.set_mult(x, y, 1 - m);
    return out;
}

Multigraph realize_group(const std::vector<std::int64_t>& factors) {
    Multigraph out = Multigraph::with_vertices(1);
    for (auto m : factors) {
        require(m >= 2, "realize_group: factors must be at least 2");
        out = wedge(out, 0, family::cycle(static_cast<std::size_t>(m)), 0);
    }
    return out;
}

Multigraph induced_subgraph(const Multigraph& g, const std::vector<Vertex>& keep) {
    std::vector<std::string> labels;
    for (Vertex v : keep) {
        require(v < g.size(), "induced_subgraph: vertex out of range");
        labels.push_back(g.label(v));
    }
    Multigraph out(std::move(labels));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.mult(keep[i], keep[j]) > 0) out.set_mult(i, j, g.mult(keep[i], keep[j]));
    return out;
}

}  // namespace chipfire
