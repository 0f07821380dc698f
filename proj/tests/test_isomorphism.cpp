#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include <matchtop/families.hpp>
#include <matchtop/isomorphism.hpp>

using namespace matchtop;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Label> vs;
    for (int i = 0; i < n; ++i) vs.emplace_back(i);
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) es.emplace_back(i, j);
    return Graph(vs, es);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<Label> vs;
    for (std::size_t i = 0; i < g.order(); ++i) vs.push_back(Label::pair("r", perm[i]));
    std::vector<Edge> es;
    for (const auto& [a, b] : g.edges()) es.emplace_back(vs[g.index_of(a)], vs[g.index_of(b)]);
    std::shuffle(vs.begin(), vs.end(), std::mt19937_64(perm.size()));
    return Graph(vs, es);
}

bool is_valid_map(const Graph& g, const Graph& h, const std::map<Label, Label>& f) {
    if (f.size() != g.order() || g.order() != h.order() || g.size() != h.size()) return false;
    for (const auto& [a, b] : g.edges())
        if (!h.has_edge(f.at(a), f.at(b))) return false;
    return true;
}

// every permutation, for small graphs only
bool brute_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    std::vector<int> p(g.order());
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (const auto& [a, b] : g.edges())
            if (!h.adjacent(p[g.index_of(a)], p[g.index_of(b)])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

} // namespace

TEST_CASE("relabelled random graphs are found isomorphic with a valid map") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 14);
        const Graph g = random_graph(rng, n, 0.15 + 0.7 * static_cast<double>(rng() % 100) / 100.0);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const Graph h = relabel(g, perm);
        auto f = find_isomorphism(g, h);
        REQUIRE(f.has_value());
        REQUIRE(is_valid_map(g, h, *f));
    }
}

TEST_CASE("isomorphism agrees with exhaustive search on small graphs") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const Graph g = random_graph(rng, n, 0.5);
        const Graph h = random_graph(rng, n, 0.5);
        REQUIRE(is_isomorphic(g, h) == brute_isomorphic(g, h));
    }
}

TEST_CASE("regular graphs that refinement cannot separate") {
    // C6 against two triangles
    const Graph c6 = cycle(6);
    const Graph tt({0, 1, 2, 3, 4, 5}, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    REQUIRE_FALSE(is_isomorphic(c6, tt));
    // the prism against K_{3,3}
    const Graph prism({0, 1, 2, 3, 4, 5}, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
    const Graph k33({0, 1, 2, 3, 4, 5}, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    REQUIRE_FALSE(is_isomorphic(prism, k33));
    REQUIRE(is_isomorphic(cycle(8), relabel(cycle(8), {3, 1, 4, 0, 5, 2, 6, 7})));
}

TEST_CASE("graphs with different invariants are rejected") {
    REQUIRE_FALSE(is_isomorphic(path(4), cycle(4)));
    REQUIRE_FALSE(is_isomorphic(path(4), path(5)));
    REQUIRE(is_isomorphic(Graph(), Graph()));
}

TEST_CASE("product line-graph components are isomorphic to their family members") {
    for (int n = 2; n <= 7; ++n)
        for (int m = 3; m <= 5; ++m) {
            auto comps = components_of_product(n, m);
            REQUIRE(comps.size() == 2);
            for (const auto& c : comps) REQUIRE(is_valid_map(c.graph, build(c.family), c.isomorphism));
        }
}
