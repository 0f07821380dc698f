#include <catch_amalgamated.hpp>

#include <random>

#include <matchtop/homology.hpp>

using namespace matchtop;

namespace {

using V = SimplicialComplex::Vertex;

HomologyProfile profile(std::map<int, std::uint64_t> betti, std::map<int, std::vector<BigInt>> tor = {}) {
    HomologyProfile p;
    for (auto [d, b] : betti) p.set(d, b);
    for (auto& [d, t] : tor) p.set(d, p.b(d), t);
    return p;
}

SimplicialComplex rp2() {
    return SimplicialComplex::from_facets(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                              {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}});
}

SimplicialComplex torus() {
    std::vector<std::vector<V>> f;
    for (V i = 0; i < 7; ++i) {
        f.push_back({i, (i + 1) % 7, (i + 3) % 7});
        f.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return SimplicialComplex::from_facets(7, f);
}

SimplicialComplex sphere_boundary(int d) {
    std::vector<std::vector<V>> f;
    for (int skip = 0; skip <= d + 1; ++skip) {
        std::vector<V> s;
        for (int i = 0; i <= d + 1; ++i)
            if (i != skip) s.push_back(static_cast<V>(i));
        f.push_back(s);
    }
    return SimplicialComplex::from_facets(static_cast<std::size_t>(d + 2), f);
}

HomologyProfile both(const SimplicialComplex& c) {
    HomologyOptions morse, direct;
    direct.method = HomologyOptions::Method::Direct;
    auto a = reduced_homology(c, morse);
    auto b = reduced_homology(c, direct);
    REQUIRE(a == b);
    return a;
}

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

long long euler(const SimplicialComplex& c) {
    long long e = 0;
    for (int d = -1; d <= c.dim(); ++d) e += (d % 2 == 0 ? -1 : 1) * static_cast<long long>(c.count(d));
    return -e;   // reduced Euler characteristic, sum (-1)^d f_d from d = -1
}

long long euler(const HomologyProfile& p) {
    long long e = 0;
    for (auto [d, b] : p.betti) e += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(b);
    return e;
}

} // namespace

TEST_CASE("conventions: void, {empty set}, a point") {
    REQUIRE(reduced_homology(SimplicialComplex::void_complex()).is_void);
    REQUIRE(both(SimplicialComplex::empty_complex()) == profile({{-1, 1}}));
    REQUIRE(both(SimplicialComplex::from_facets(1, {{0}})).trivial());
    REQUIRE(both(SimplicialComplex::from_facets(3, {{0}, {1}, {2}})) == profile({{0, 2}}));
}

TEST_CASE("boundaries of simplices are spheres") {
    for (int d = 0; d <= 6; ++d) REQUIRE(both(sphere_boundary(d)) == profile({{d, 1}}));
}

TEST_CASE("closed surfaces") {
    REQUIRE(both(rp2()) == profile({}, {{1, {BigInt(2)}}}));
    REQUIRE(both(torus()) == profile({{1, 2}, {2, 1}}));
}

TEST_CASE("join homology matches the join complex, torsion included") {
    const auto r = rp2();
    const auto rr = join(r, r);
    const auto p = reduced_homology(r);
    REQUIRE(both(rr) == join(p, p));
    const auto t = torus();
    REQUIRE(both(join(r, t)) == join(p, reduced_homology(t)));
    REQUIRE(join(p, profile({{-1, 1}})) == p);
    HomologyProfile v;
    v.is_void = true;
    REQUIRE(join(p, v).is_void);
}

TEST_CASE("suspension is a join with S^0") {
    const auto s0 = SimplicialComplex::from_facets(2, {{0}, {1}});
    for (const auto& c : {rp2(), torus(), sphere_boundary(2)})
        REQUIRE(both(join(c, s0)) == suspend(reduced_homology(c), 1));
}

TEST_CASE("wedge adds degreewise") {
    const auto w = wedge({profile({{2, 1}}), profile({{2, 3}, {4, 1}}), profile({}, {{1, {BigInt(2)}}}), profile({}, {{1, {BigInt(3)}}})});
    REQUIRE(w == profile({{2, 4}, {4, 1}}, {{1, {BigInt(6)}}}));
}

TEST_CASE("Morse and direct methods agree on Ind of random small graphs") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const Graph g = random_graph(rng, n, 0.15 + 0.05 * static_cast<double>(trial % 12));
        const auto c = independence_complex(g);
        const auto h = both(c);
        REQUIRE(euler(h) == euler(c));
    }
}

TEST_CASE("Morse and direct methods agree on matching complexes of small graphs") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Graph g = random_graph(rng, n, 0.5);
        if (g.size() == 0 || g.size() > 16) continue;
        both(matching_complex(g));
    }
    // M(K_7) has 3-torsion in H_1
    const auto m7 = both(matching_complex(complete(7)));
    REQUIRE(m7.t(1) == std::vector<BigInt>{3});
}

TEST_CASE("paths and cycles") {
    // Ind(P_n): a point when n = 3k+1, otherwise a sphere
    for (int n = 1; n <= 18; ++n) {
        const auto h = both(independence_complex(path(n)));
        if (n % 3 == 1) REQUIRE(h.trivial());
        else REQUIRE(h == profile({{(n + 1) / 3 - 1, 1}}));
    }
}

TEST_CASE("dimension ranges restrict the report") {
    const auto t = torus();
    REQUIRE(reduced_homology(t, 2, 2) == profile({{2, 1}}));
    REQUIRE(reduced_homology(t, 0, 1) == profile({{1, 2}}));
    REQUIRE(reduced_homology(t, 3, 9).trivial());
    const auto cut = independence_complex(path(9), 2);
    REQUIRE(reduced_homology(cut).betti.empty());
}

TEST_CASE("budgets abort the matrix stage") {
    HomologyOptions o;
    o.method = HomologyOptions::Method::Direct;
    o.budget.max_matrix_entries = 10;
    REQUIRE_THROWS_AS(reduced_homology(torus(), o), BudgetExceeded);
}

TEST_CASE("profile json round trip") {
    const auto p = profile({{1, 7}, {3, 2}}, {{2, {BigInt(2), BigInt(4)}}});
    REQUIRE(HomologyProfile::from_json(p.to_json()) == p);
    REQUIRE(profile({{1, 7}}).to_json().dump() == R"({"betti":{"1":7}})");
}
