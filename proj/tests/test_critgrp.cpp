#include "doctest.h"

#include <random>

#include "census.hpp"
#include "chipfire/critgrp.hpp"
#include "chipfire/divisor.hpp"
#include "chipfire/errors.hpp"
#include "chipfire/exactla.hpp"
#include "oracles.hpp"

using namespace chipfire;

TEST_CASE("cokernel") {
    CokernelResult c = cokernel(IntegerMatrix{{2, 0}, {0, 0}});
    CHECK(c.free_rank == 1);
    CHECK(c.torsion.to_string() == "Z/2");
    CHECK(cokernel(IntegerMatrix{{1}, {2}, {3}}).free_rank == 2);
    CHECK(cokernel(IntegerMatrix{{1, 2, 3}}).free_rank == 0);
    // torsion-only
    CHECK(cokernel(IntegerMatrix{{4, 6}, {6, 4}}).torsion.to_string() == "Z/2 ⊕ Z/10");
}

TEST_CASE("small families") {
    CHECK(critical_group(family::diamond()).to_string() == "Z/8");
    CHECK(critical_group(family::path(5)).trivial());
    CHECK(critical_group(Multigraph::with_vertices(1)).trivial());
    CHECK(critical_group(family::cycle(2)).to_string() == "Z/2");
    for (std::size_t n = 3; n <= 8; ++n) CHECK(critical_group(family::complete(n)) == AbelianGroup::power(n, n - 2));
    CHECK(critical_group(family::complete_bipartite(2, 3)).to_string() == "Z/2 ⊕ Z/6");
    CHECK(critical_group(family::house()).to_string() == "Z/11");
    CHECK_THROWS_AS(critical_group(parse_undirected("a b\nc d\n")), GraphError);
    CHECK(spanning_tree_count(parse_undirected("a b\nc d\n")) == 0);
}

TEST_CASE("order equals tree count equals enumeration, every small graph") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& g : census::connected_multigraphs(n, 6)) {
            BigInt trees = spanning_tree_count(g);
            CHECK(critical_group(g).order() == trees);
            CHECK(trees == static_cast<unsigned long>(spanning_tree_enumerate(g).size()));
            CHECK(abs(determinant(reduced_laplacian(g, 0, 0))) == trees);
        }
}

TEST_CASE("any deleted row and column gives the same group") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 60; ++t) {
        Multigraph g = census::random_connected_multi(rng, 2 + t % 6, 5);
        AbelianGroup k = critical_group(g);
        for (Vertex i = 0; i < g.size(); ++i)
            for (Vertex j = 0; j < g.size(); ++j) CHECK(critical_group_reduced_at(g, i, j) == k);
    }
}

TEST_CASE("directed") {
    auto d = std::get<DirectedMultigraph>(parse_graph("directed\na b\nb c\nc a\n"));
    // L = I - P for a cyclic permutation P, whose cokernel is Z
    CokernelResult c = directed_critical_group(d);
    CHECK(c.free_rank == 1);
    CHECK(c.torsion.trivial());
    auto e = std::get<DirectedMultigraph>(parse_graph("directed\na b\n"));
    CHECK(directed_critical_group(e).free_rank == 1);
    CHECK(directed_critical_group(e).torsion.trivial());
    // both directions of an undirected graph: free rank 1, torsion K(G)
    DirectedMultigraph both(family::house().labels());
    for (auto [u, v] : family::house().edge_units()) {
        both.add_arc(u, v);
        both.add_arc(v, u);
    }
    CHECK(directed_critical_group(both).torsion.to_string() == "Z/11");
}

TEST_CASE("wedge gives the direct sum") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 30; ++t) {
        Multigraph a = census::random_connected(rng, 1 + rng() % 5, 0.5);
        Multigraph b = census::random_connected(rng, 1 + rng() % 5, 0.5);
        Multigraph w = wedge(a, rng() % a.size(), b, rng() % b.size());
        CHECK(critical_group(w) == critical_group(a).direct_sum(critical_group(b)));
    }
}

TEST_CASE("subdivision prediction") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 20; ++t) {
        Multigraph g = census::random_connected_multi(rng, 2 + rng() % 4, 3);
        for (std::int64_t k : {2, 3, 4})
            CHECK(critical_group(subdivide(g, k)) == subdivision_predict(critical_group(g), genus(g), k));
    }
    // subdividing every edge of C_n gives C_{kn}
    CHECK(subdivision_predict(AbelianGroup::power(5, 1), 1, 3).to_string() == "Z/15");
}

TEST_CASE("cone formula") {
    for (std::int64_t n = 2; n <= 5; ++n) {
        AbelianGroup k = critical_group(cone(family::path(2), n));
        CHECK(k == AbelianGroup::power(n + 2, n));
    }
    std::mt19937_64 rng(10);
    for (int t = 0; t < 20; ++t) {
        Multigraph g = census::random_connected_multi(rng, 1 + rng() % 4, 3);
        std::int64_t m = 2 + rng() % 3;
        CHECK(cone_order_formula(g, m) == critical_group(cone(g, m)).order());
    }
    CHECK_THROWS_AS(cone_order_formula(family::path(2), 1), DomainError);
}

TEST_CASE("fibonacci and circulants") {
    CHECK(fibonacci(1) == 1);
    CHECK(fibonacci(2) == 1);
    CHECK(fibonacci(12) == 144);
    CHECK(fibonacci(90) == BigInt("2880067194370816120"));
    for (std::int64_t n = 5; n <= 16; ++n)
        CHECK(critical_group(family::circulant(n, {1, 2})) == predicted_circulant_group(n));
    CHECK(predicted_circulant_group(5).to_string() == "Z/5 ⊕ Z/5 ⊕ Z/5");
    CHECK(predicted_circulant_group(7).to_string() == "Z/13 ⊕ Z/91");
    CHECK(predicted_circulant_group(6).order() == 384);
}

TEST_CASE("element order") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 60; ++t) {
        Multigraph g = census::random_connected_multi(rng, 2 + t % 5, 4);
        Vertex x = rng() % g.size(), y = rng() % g.size();
        Divisor d = Divisor::delta(g.size(), x, y);
        BigInt ord = chipfire::element_order(g, d, default_base(g));
        CHECK(ord == oracle::element_order(g, d));
        CHECK(divides(ord, critical_group(g).exponent()));
    }
    CHECK_THROWS_AS(chipfire::element_order(family::cycle(3), Divisor::unit(3, 0), 2), DomainError);
    // on a cycle, v1 - v2 generates
    CHECK(chipfire::element_order(family::cycle(7), Divisor::delta(7, 0, 1), 6) == 7);
}

TEST_CASE("delta generator test") {
    std::mt19937_64 rng(13);
    int seen = 0;
    while (seen < 100) {
        Multigraph g = census::random_connected(rng, 3 + rng() % 4, 0.5);
        Vertex x = rng() % g.size(), y = rng() % g.size();
        if (x == y) continue;
        Multigraph h = toggle_edge(g, x, y);
        if (!is_connected(h)) continue;
        ++seen;
        DeltaGeneratorTest r = delta_generator_test(g, x, y);
        BigInt ord = oracle::element_order(g, Divisor::delta(g.size(), x, y));
        BigInt n = critical_group(g).order();
        CHECK(r.index * ord == n);
        CHECK(r.generates == (ord == n));
        CHECK(r.gcd == gcd(n, critical_group(h).order()));
        CHECK(r.generates == (r.gcd == 1));
        CHECK(divides(r.index, r.gcd));
        CHECK(divides(r.gcd, r.index * r.index));
    }
    CHECK(delta_generator_test(family::cycle(4), 0, 1).generates);
    CHECK(delta_generator_test(family::cycle(4), 0, 1).gcd == 1);

    // wedge of C3, C4, C5: no delta generates
    Multigraph w = wedge(wedge(family::cycle(3), 0, family::cycle(4), 0), 0, family::cycle(5), 0);
    BigInt n = critical_group(w).order();
    for (Vertex x = 0; x < w.size(); ++x)
        for (Vertex y = x + 1; y < w.size(); ++y) {
            CHECK(chipfire::element_order(w, Divisor::delta(w.size(), x, y), x) < n);
            if (is_connected(toggle_edge(w, x, y))) CHECK_FALSE(delta_generator_test(w, x, y).generates);
        }
    CHECK_THROWS_AS(delta_generator_test(family::path(2), 0, 1), GraphError);
}

TEST_CASE("sylow of critical groups") {
    AbelianGroup k = critical_group(family::circulant(12, {1, 2}));
    CHECK(k.to_string() == "Z/12 ⊕ Z/144 ⊕ Z/144");
    CHECK(sylow(k, 2).to_string() == "Z/4 ⊕ Z/16 ⊕ Z/16");
    CHECK(sylow(k, 3).to_string() == "Z/3 ⊕ Z/9 ⊕ Z/9");
}
