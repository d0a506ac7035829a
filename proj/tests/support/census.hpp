#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "chipfire/graph.hpp"

namespace census {

using chipfire::Multigraph;

// All 2^(n choose 2) labelled simple graphs on v1..vn.
std::vector<Multigraph> simple_graphs(std::size_t n);

// One representative per isomorphism class of connected simple graphs on n vertices.
std::vector<Multigraph> connected_classes(std::size_t n);

// Every connected labelled multigraph on n vertices with at most max_edges edges.
std::vector<Multigraph> connected_multigraphs(std::size_t n, std::int64_t max_edges);

// Random connected simple graph: a random spanning tree plus extra edges with probability p.
Multigraph random_connected(std::mt19937_64& rng, std::size_t n, double p);

// Random connected multigraph with at most `extra` edges beyond a spanning tree.
Multigraph random_connected_multi(std::mt19937_64& rng, std::size_t n, int extra);

}  // namespace census
