#include "census.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace census {

using chipfire::Vertex;

namespace {

std::vector<std::pair<Vertex, Vertex>> all_pairs(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return pairs;
}

}  // namespace

std::vector<Multigraph> simple_graphs(std::size_t n) {
    const auto pairs = all_pairs(n);
    std::vector<Multigraph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        Multigraph g = Multigraph::with_vertices(n);
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (mask >> k & 1) g.add_edge(pairs[k].first, pairs[k].second);
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<Multigraph> connected_classes(std::size_t n) {
    const auto pairs = all_pairs(n);
    std::vector<Vertex> perm(n);
    std::set<std::uint64_t> seen;
    std::vector<Multigraph> out;
    for (auto& g : simple_graphs(n)) {
        if (!chipfire::is_connected(g)) continue;
        std::iota(perm.begin(), perm.end(), 0);
        std::uint64_t best = ~std::uint64_t{0};
        do {
            std::uint64_t code = 0;
            for (std::size_t k = 0; k < pairs.size(); ++k)
                if (g.mult(perm[pairs[k].first], perm[pairs[k].second])) code |= std::uint64_t{1} << k;
            best = std::min(best, code);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (seen.insert(best).second) out.push_back(std::move(g));
    }
    return out;
}

std::vector<Multigraph> connected_multigraphs(std::size_t n, std::int64_t max_edges) {
    const auto pairs = all_pairs(n);
    std::vector<Multigraph> out;
    if (n == 1) {
        out.push_back(Multigraph::with_vertices(1));
        return out;
    }
    std::vector<std::int64_t> m(pairs.size(), 0);
    auto rec = [&](auto&& self, std::size_t k, std::int64_t left) -> void {
        if (k == pairs.size()) {
            Multigraph g = Multigraph::with_vertices(n);
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (m[i]) g.add_edge(pairs[i].first, pairs[i].second, m[i]);
            if (chipfire::is_connected(g)) out.push_back(std::move(g));
            return;
        }
        for (std::int64_t x = 0; x <= left; ++x) {
            m[k] = x;
            self(self, k + 1, left - x);
        }
        m[k] = 0;
    };
    rec(rec, 0, max_edges);
    return out;
}

Multigraph random_connected(std::mt19937_64& rng, std::size_t n, double p) {
    Multigraph g = Multigraph::with_vertices(n);
    for (Vertex v = 1; v < n; ++v) g.add_edge(v, std::uniform_int_distribution<Vertex>(0, v - 1)(rng));
    std::bernoulli_distribution coin(p);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (g.mult(i, j) == 0 && coin(rng)) g.add_edge(i, j);
    return g;
}

Multigraph random_connected_multi(std::mt19937_64& rng, std::size_t n, int extra) {
    Multigraph g = Multigraph::with_vertices(n);
    for (Vertex v = 1; v < n; ++v) g.add_edge(v, std::uniform_int_distribution<Vertex>(0, v - 1)(rng));
    if (n < 2) return g;
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    const int count = std::uniform_int_distribution<int>(0, extra)(rng);
    for (int k = 0; k < count; ++k) {
        Vertex a = pick(rng), b = pick(rng);
        if (a != b) g.add_edge(a, b);
    }
    return g;
}

}  // namespace census
