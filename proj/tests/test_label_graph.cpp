#include <catch_amalgamated.hpp>

#include <random>

#include <matchtop/graph.hpp>

using namespace matchtop;

TEST_CASE("label ordering puts integers before strings before tuples") {
    REQUIRE(Label(5) < Label("a"));
    REQUIRE(Label("z") < Label::pair(0, 0));
    REQUIRE(Label::pair(1, 2) < Label::pair(1, 3));
    REQUIRE(Label::pair(1, 2) < Label::tuple({1, 2, 0}));
    REQUIRE(Label(-3) < Label(2));
}

TEST_CASE("label text and json round trips") {
    const Label l = named("g", 1, 2);
    REQUIRE(l.str() == "g(1,2)");
    REQUIRE(Label::from_json(l.to_json()) == l);
    REQUIRE(Label::parse("g(1,2)") == l);
    REQUIRE(Label::parse("7") == Label(7));
    REQUIRE(Label::parse("(3,(1,2))") == Label::tuple({3, Label::pair(1, 2)}));
    const Label nested = Label::tuple({"x", Label::pair(-1, "y"), 4});
    REQUIRE(Label::from_json(nested.to_json()) == nested);
}

TEST_CASE("graph construction rejects malformed input") {
    REQUIRE_THROWS_AS(Graph({1, 1}, {}), GraphError);
    REQUIRE_THROWS_AS(Graph({1, 2}, {{1, 1}}), GraphError);
    REQUIRE_THROWS_AS(Graph({1, 2}, {{1, 2}, {2, 1}}), GraphError);
    REQUIRE_THROWS(Graph({1, 2}, {{1, 3}}));
}

TEST_CASE("paths, cycles and complete graphs") {
    REQUIRE(path(5).order() == 5);
    REQUIRE(path(5).size() == 4);
    REQUIRE(cycle(6).size() == 6);
    REQUIRE(complete(5).size() == 10);
    REQUIRE(edgeless(4).size() == 0);
    REQUIRE_THROWS_AS(path(0), GraphError);
    REQUIRE(Graph().empty());
}

TEST_CASE("categorical product of paths has the diagonal adjacency") {
    for (int n = 1; n <= 7; ++n)
        for (int m = 1; m <= 6; ++m) {
            const Graph g = categorical_product(path(n), path(m));
            REQUIRE(g.order() == static_cast<std::size_t>(n * m));
            REQUIRE(g.size() == static_cast<std::size_t>(2 * (n - 1) * (m - 1)));
            REQUIRE(connected_components(g).size() == (n >= 2 && m >= 2 ? 2u : static_cast<std::size_t>(n * m)));
        }
    const Graph g = categorical_product(path(3), path(3));
    REQUIRE(g.has_edge(Label::pair(1, 1), Label::pair(2, 2)));
    REQUIRE_FALSE(g.has_edge(Label::pair(1, 1), Label::pair(1, 2)));
}

TEST_CASE("cartesian product of paths is the grid") {
    const Graph g = cartesian_product(path(3), path(4));
    REQUIRE(g.size() == 3u * 3 + 2u * 4);
}

TEST_CASE("line graph sizes follow the degree sequence") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 8);
        std::vector<Label> vs;
        for (int i = 0; i < n; ++i) vs.emplace_back(i);
        std::vector<Edge> es;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 2) es.emplace_back(i, j);
        const Graph g(vs, es);
        const Graph l = line_graph(g);
        std::size_t expect = 0;
        for (const auto& v : g.vertices()) expect += g.degree(v) * (g.degree(v) - 1) / 2;
        REQUIRE(l.order() == g.size());
        REQUIRE(l.size() == expect);
    }
}

TEST_CASE("vertex deletion and induced subgraphs") {
    const Graph c = cycle(5);
    const Graph p = c.delete_vertex(Label(1));
    REQUIRE(p.order() == 4);
    REQUIRE(p.size() == 3);
    REQUIRE(c.induced({1, 2, 3}).size() == 2);
    REQUIRE(c.neighborhood(Label(1), true).size() == 3);
}

TEST_CASE("graph json round trip") {
    const Graph g = categorical_product(path(3), path(2));
    REQUIRE(Graph::from_json(g.to_json()).to_json() == g.to_json());
}

TEST_CASE("disjoint union and components") {
    const Graph u = disjoint_union(path(3), Graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}}));
    REQUIRE(u.order() == 7);
    REQUIRE(connected_components(u).size() == 2);
    REQUIRE_FALSE(is_connected(u));
    REQUIRE(is_connected(cycle(4)));
}
