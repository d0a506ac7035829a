#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "chipfire/abelian.hpp"
#include "chipfire/exactla.hpp"
#include "chipfire/graph.hpp"

namespace chipfire {

struct Divisor;

/// Z^free_rank ⊕ torsion.
struct CokernelResult {
    std::size_t free_rank = 0;
    AbelianGroup torsion;

    bool operator==(const CokernelResult&) const = default;
};

CokernelResult cokernel(const IntegerMatrix& m);

/// K(G) from the reduced Laplacian at the last vertex. Throws GraphError when
/// g is disconnected.
AbelianGroup critical_group(const Multigraph& g);

/// Torsion of cok(L^{row,col}); any row/column pair gives K(G) for connected g.
AbelianGroup critical_group_reduced_at(const Multigraph& g, Vertex row, Vertex col);

CokernelResult directed_critical_group(const DirectedMultigraph& g);

/// |det L^{n,n}|; 0 for disconnected graphs and 1 for a single vertex.
BigInt spanning_tree_count(const Multigraph& g);

/// Brute-force list of spanning trees as indices into g.edge_units().
/// Limited to at most 20 edge units.
std::vector<std::vector<std::size_t>> spanning_tree_enumerate(const Multigraph& g);

/// Least m >= 1 with m * D principal. D must have degree 0.
BigInt element_order(const Multigraph& g, const Divisor& d, Vertex q);

struct DeltaGeneratorTest {
    BigInt gcd;    // gcd(|K(G)|, |K(G')|)
    BigInt index;  // [K(G) : <delta_xy>]
    bool generates = false;
};

/// Decides whether delta_xy = x - y generates K(G), comparing with the
/// graph G' in which the pair {x, y} is toggled.
DeltaGeneratorTest delta_generator_test(const Multigraph& g, Vertex x, Vertex y);

/// |p_L(-m)| / m * (m + k)^(m - 1) for the m-th cone over a connected graph
/// on k vertices. Requires m >= 2.
BigInt cone_order_formula(const Multigraph& g, std::int64_t m);

/// F_n with F_1 = F_2 = 1.
BigInt fibonacci(std::int64_t n);

/// Z/d ⊕ Z/F_n ⊕ Z/(n F_n / d) with d = gcd(n, F_n); the known form of
/// K(C_n(1, 2)) for n >= 5.
AbelianGroup predicted_circulant_group(std::int64_t n);

/// Critical group after subdividing every edge into k edges, given K(G) and
/// the genus g of G.
AbelianGroup subdivision_predict(const AbelianGroup& h, std::int64_t genus, std::int64_t k);

}  // namespace chipfire
