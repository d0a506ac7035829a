#include "doctest.h"

#include "chipfire/errors.hpp"
#include "chipfire/exactla.hpp"
#include "chipfire/graph.hpp"
#include "census.hpp"

using namespace chipfire;

TEST_CASE("parse and write round trip") {
    const char* text =
        "# diamond with a spare vertex\n"
        "v1 v2\n"
        "v1 v3 2\n"
        "vertex lone\n"
        "v2 v3\n";
    Multigraph g = parse_undirected(text);
    CHECK(g.size() == 4);
    CHECK(g.mult(0, 2) == 2);
    CHECK(g.degree(*g.find("lone")) == 0);
    Multigraph back = parse_undirected(write_graph(g));
    CHECK(write_graph(back) == write_graph(g));
    CHECK(back.edge_count() == 4);

    // repeated lines accumulate
    CHECK(parse_undirected("a b\na b 3\n").mult(0, 1) == 4);
}

TEST_CASE("directed files") {
    AnyGraph g = parse_graph("directed\na b\nb a 2\nb c\n");
    REQUIRE(std::holds_alternative<DirectedMultigraph>(g));
    const auto& d = std::get<DirectedMultigraph>(g);
    CHECK(d.mult(1, 0) == 2);
    CHECK(d.out_degree(1) == 3);
    CHECK(std::get<DirectedMultigraph>(parse_graph(write_graph(d))) == d);
    IntegerMatrix l = directed_laplacian(d);
    // outdegree on the diagonal, so rows sum to zero
    for (std::size_t i = 0; i < 3; ++i) {
        BigInt s = 0;
        for (std::size_t j = 0; j < 3; ++j) s += l(i, j);
        CHECK(s == 0);
    }
}

TEST_CASE("parse errors carry the line") {
    auto line_of = [](const char* text) {
        try {
            parse_graph(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("a b\nb b\n") == 2);
    CHECK(line_of("a b\n\nb c 0\n") == 3);
    CHECK(line_of("a b -2\n") == 1);
    CHECK(line_of("a b c d\n") == 1);
    CHECK(line_of("a b x\n") == 1);
    CHECK(line_of("a b\ndirected\n") == 2);
    CHECK(line_of("vertex\n") == 1);
}

TEST_CASE("laplacian of the diamond") {
    IntegerMatrix l = laplacian(family::diamond());
    IntegerMatrix want{{3, -1, -1, -1}, {-1, 2, 0, -1}, {-1, 0, 2, -1}, {-1, -1, -1, 3}};
    CHECK(l == want);
    CHECK(reduced_laplacian(family::diamond(), 3, 3) == l.minor_matrix(3, 3));
}

TEST_CASE("laplacian rows sum to zero and the kernel tracks components") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; ++t) {
        Multigraph a = census::random_connected_multi(rng, 1 + t % 5, 4);
        Multigraph b = census::random_connected_multi(rng, 1 + t % 3, 3);
        // disjoint union
        Multigraph g = Multigraph::with_vertices(a.size() + b.size());
        for (Vertex i = 0; i < a.size(); ++i)
            for (Vertex j = i + 1; j < a.size(); ++j)
                if (a.mult(i, j)) g.add_edge(i, j, a.mult(i, j));
        for (Vertex i = 0; i < b.size(); ++i)
            for (Vertex j = i + 1; j < b.size(); ++j)
                if (b.mult(i, j)) g.add_edge(a.size() + i, a.size() + j, b.mult(i, j));
        IntegerMatrix l = laplacian(g);
        for (std::size_t i = 0; i < l.rows(); ++i) {
            BigInt s = 0;
            for (std::size_t j = 0; j < l.cols(); ++j) s += l(i, j);
            CHECK(s == 0);
        }
        CHECK(connected_components(g).size() == 2);
        CHECK_FALSE(is_connected(g));
        CHECK(rational_null_space(l).size() == 2);
        CHECK(rank(l) == g.size() - 2);
    }
}

TEST_CASE("genus") {
    CHECK(genus(family::complete(4)) == 3);
    CHECK(genus(family::path(5)) == 0);
    CHECK(genus(family::house()) == 2);
    CHECK_THROWS_AS(genus(parse_undirected("a b\nc d\n")), GraphError);
}

TEST_CASE("families") {
    CHECK(family::path(4).edge_count() == 3);
    CHECK(family::cycle(5).edge_count() == 5);
    CHECK(family::cycle(2).mult(0, 1) == 2);
    CHECK(family::complete(6).edge_count() == 15);
    Multigraph kb = family::complete_bipartite(2, 3);
    CHECK(kb.edge_count() == 6);
    CHECK(kb.label(0) == "x1");
    CHECK(kb.label(4) == "y3");
    Multigraph st = family::star(4);
    CHECK(st.degree(st.index_of("v0")) == 4);
    CHECK(family::circulant(6, {1, 2}).edge_count() == 12);
    CHECK(family::circulant(6, {3}).edge_count() == 3);
    CHECK(family::house().edge_count() == 6);
    CHECK(family::diamond().edge_count() == 5);
    CHECK(family::from_spec("circulant 6 1 2") == family::circulant(6, {1, 2}));
    CHECK(family::from_spec("complete_bipartite 3 3") == family::complete_bipartite(3, 3));
    CHECK(family::from_spec("house") == family::house());
    CHECK_THROWS_AS(family::from_spec("dodecahedron"), DomainError);
    CHECK_THROWS_AS(family::circulant(6, {4}), DomainError);
}

TEST_CASE("wedge") {
    Multigraph t = family::cycle(3);
    Multigraph w = wedge(t, 0, t, 0);
    CHECK(w.size() == 5);
    CHECK(w.edge_count() == 6);
    CHECK(w.degree(0) == 4);
    CHECK(w.find("v2'").has_value());
}

TEST_CASE("subdivide") {
    Multigraph g = parse_undirected("a b 2\nb c\n");
    Multigraph s = subdivide(g, 3);
    CHECK(s.size() == 3 + 3 * 2);
    CHECK(s.edge_count() == 9);
    CHECK(genus(s) == genus(g));
    Multigraph one = subdivide(g, 2, std::pair<Vertex, Vertex>{0, 1});
    CHECK(one.size() == 4);
    CHECK(one.mult(0, 1) == 1);
    CHECK(subdivide(g, 1) == g);
}

TEST_CASE("cone") {
    Multigraph c = cone(family::path(2), 3);
    CHECK(c.size() == 5);
    CHECK(c.edge_count() == 1 + 3 + 6);
    CHECK(c.find("c1").has_value());
}

TEST_CASE("toggle") {
    Multigraph g = family::cycle(4);
    Multigraph h = toggle_edge(g, 0, 2);
    CHECK(h.mult(0, 2) == 1);
    CHECK(toggle_edge(h, 0, 2) == g);
    CHECK_THROWS_AS(toggle_edge(parse_undirected("a b 2\n"), 0, 1), DomainError);
}

TEST_CASE("induced subgraph") {
    Multigraph h = induced_subgraph(family::house(), {0, 1, 2});
    CHECK(h.size() == 3);
    CHECK(h.edge_count() == 2);
}

TEST_CASE("realize group") {
    Multigraph g = realize_group({2, 3, 5});
    CHECK(g.size() == 1 + 1 + 2 + 4);
    CHECK(genus(g) == 3);
    CHECK(realize_group({}).size() == 1);
}
