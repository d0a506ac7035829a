#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chipfire/abelian.hpp"
#include "chipfire/bigint.hpp"
#include "chipfire/graph.hpp"

namespace chipfire::arith {

/// Arithmetical structure (r, d): gcd(r) == 1 and d_v r_v == sum_w mult(v, w) r_w.
struct Structure {
    std::vector<std::int64_t> r;
    std::vector<std::int64_t> d;

    bool operator==(const Structure&) const = default;
    auto operator<=>(const Structure&) const = default;
};

/// Computes d from r. Throws DomainError naming the offending vertex when
/// some d_v is not integral, or when gcd(r) != 1.
Structure validate(const Multigraph& g, const std::vector<std::int64_t>& r);

/// diag(d) - A.
IntegerMatrix structure_matrix(const Multigraph& g, const Structure& s);

struct Enumeration {
    std::int64_t r_max = 0;
    std::vector<Structure> structures;  // sorted by r
    /// Enumeration is exhaustive only among r-vectors with entries <= r_max.
    static constexpr const char* completeness =
        "complete only among structures with every r entry <= r_max";
};

/// All structures with max(r) <= r_max, by pruned exhaustive search.
Enumeration enumerate(const Multigraph& g, std::int64_t r_max);

bool is_smooth(const Multigraph& g, const Structure& s);
/// Vertices at which a smoothing operation applies.
std::vector<Vertex> smoothable_vertices(const Multigraph& g, const Structure& s);

struct Smoothed {
    Multigraph graph;
    Structure structure;
};

/// Removes v: a degree-2 local maximum is contracted into an edge between its
/// two neighbours; a degree-1 vertex with r_v equal to its neighbour is dropped.
Smoothed smooth_at(const Multigraph& g, const Structure& s, Vertex v);

/// Same vertices; mult(i, j) * r_i * r_j edges between i and j.
Multigraph g_r(const Multigraph& g, const Structure& s);

/// Torsion of cok(diag(d) - A).
AbelianGroup critical_group(const Multigraph& g, const Structure& s);

/// prod x_ij * prod r_i^(deg(v_i) - 2), for graphs whose skeleton is a tree.
Rational order_formula_tree(const Multigraph& g, const Structure& s);

/// Sum over spanning trees T of prod r_i^(deg_T(v_i) - 2).
Rational order_formula_spanning(const Multigraph& g, const Structure& s);

/// Structures on K_n via the ordered solutions of sum 1/(d_i + 1) = 1.
/// Limited to n <= 6.
std::vector<Structure> kn_unit_fractions(std::size_t n);

/// "r=(a,b,...) d=(x,y,...)".
std::string to_string(const Structure& s);
/// Parses "3,2,4,9" (or "(3,2,4,9)").
std::vector<std::int64_t> parse_r(std::string_view text);

}  // namespace chipfire::arith
