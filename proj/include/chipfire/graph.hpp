#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "chipfire/matrix.hpp"

namespace chipfire {

using Vertex = std::size_t;

// Shared storage for labelled vertex sets with an n x n multiplicity table.
class LabelledTable {
public:
    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(Vertex v) const { return labels_.at(v); }
    std::optional<Vertex> find(std::string_view label) const;
    /// Index of `label`; throws DomainError if there is no such vertex.
    Vertex index_of(std::string_view label) const;

    std::int64_t mult(Vertex i, Vertex j) const { return mult_[i * size() + j]; }

    /// Appends a vertex and returns its index. Throws DomainError on a duplicate label.
    Vertex add_vertex(std::string label);

    bool operator==(const LabelledTable&) const = default;

protected:
    std::vector<std::string> labels_;
    std::vector<std::int64_t> mult_;  // row-major n x n

    std::int64_t& at(Vertex i, Vertex j) { return mult_[i * size() + j]; }
    void check_vertex(Vertex v) const;
};

/// Finite undirected multigraph without self-loops. Vertex identity is the
/// label; the index order is the insertion order.
class Multigraph : public LabelledTable {
public:
    Multigraph() = default;
    explicit Multigraph(std::vector<std::string> labels);
    /// Vertices labelled v1..vn.
    static Multigraph with_vertices(std::size_t n);

    /// Adds `m` parallel edges between u and v (u != v).
    void add_edge(Vertex u, Vertex v, std::int64_t m = 1);
    /// Sets the multiplicity of {u, v} outright.
    void set_mult(Vertex u, Vertex v, std::int64_t m);

    std::int64_t degree(Vertex v) const;
    std::vector<Vertex> neighbors(Vertex v) const;
    /// Total number of edges counted with multiplicity.
    std::int64_t edge_count() const;
    /// Every edge unit as a (u, v) pair with u < v; parallel edges repeat.
    std::vector<std::pair<Vertex, Vertex>> edge_units() const;

    bool operator==(const Multigraph&) const = default;
};

/// Finite directed multigraph without self-loops; mult(i, j) counts arcs i -> j.
class DirectedMultigraph : public LabelledTable {
public:
    DirectedMultigraph() = default;
    explicit DirectedMultigraph(std::vector<std::string> labels);

    void add_arc(Vertex from, Vertex to, std::int64_t m = 1);
    std::int64_t out_degree(Vertex v) const;

    bool operator==(const DirectedMultigraph&) const = default;
};

using AnyGraph = std::variant<Multigraph, DirectedMultigraph>;

// Text format.
AnyGraph parse_graph(std::string_view text);
Multigraph parse_undirected(std::string_view text);
std::string write_graph(const Multigraph& g);
std::string write_graph(const DirectedMultigraph& g);

// Matrices.
IntegerMatrix laplacian(const Multigraph& g);
IntegerMatrix directed_laplacian(const DirectedMultigraph& g);
IntegerMatrix reduced_laplacian(const Multigraph& g, Vertex row, Vertex col);
IntegerMatrix adjacency(const Multigraph& g);

// Structure.
std::vector<std::vector<Vertex>> connected_components(const Multigraph& g);
bool is_connected(const Multigraph& g);
/// |E| - |V| + 1; throws GraphError for disconnected input.
std::int64_t genus(const Multigraph& g);

// Families. All of them label vertices v1..vn unless stated otherwise.
namespace family {
Multigraph path(std::size_t n);
/// n >= 2; cycle(2) is a doubled edge.
Multigraph cycle(std::size_t n);
Multigraph complete(std::size_t n);
/// Parts labelled x1..xm and y1..yn.
Multigraph complete_bipartite(std::size_t m, std::size_t n);
/// Centre v0, leaves v1..vn.
Multigraph star(std::size_t n);
/// Offsets distinct, each in 1..n/2; offset n/2 gives a single antipodal edge.
Multigraph circulant(std::size_t n, const std::vector<std::size_t>& offsets);
Multigraph house();
Multigraph diamond();
/// The graph described by a short spec such as "cycle 5", "circulant 6 1 2",
/// "complete_bipartite 3 3" or "house".
Multigraph from_spec(std::string_view spec);
}  // namespace family

// Operations.
/// Identifies v1 in g1 with v2 in g2. Colliding labels from g2 are primed.
Multigraph wedge(const Multigraph& g1, Vertex v1, const Multigraph& g2, Vertex v2);
/// Replaces every edge unit (or one unit of `edge`) by a path of k edges.
Multigraph subdivide(const Multigraph& g, std::size_t k,
                     std::optional<std::pair<Vertex, Vertex>> edge = std::nullopt);
/// Join of g with K_m.
Multigraph cone(const Multigraph& g, std::size_t m);
/// Flips the pair {x, y} between 0 and 1 edges; multiplicity > 1 is rejected.
Multigraph toggle_edge(const Multigraph& g, Vertex x, Vertex y);
/// Wedge of cycles C_m for each factor; the empty list gives a single vertex.
Multigraph realize_group(const std::vector<std::int64_t>& factors);
/// Keeps the vertices in `keep` (in that order) and the edges among them.
Multigraph induced_subgraph(const Multigraph& g, const std::vector<Vertex>& keep);

}  // namespace chipfire
