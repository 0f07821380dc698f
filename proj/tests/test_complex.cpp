#include <catch_amalgamated.hpp>

#include <random>

#include <matchtop/complex.hpp>

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

// independent sets by cardinality, over all vertex subsets
std::vector<std::size_t> brute_independent_counts(const Graph& g) {
    const int n = static_cast<int>(g.order());
    std::vector<std::size_t> out(static_cast<std::size_t>(n + 1), 0);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            if (mask >> i & 1)
                for (int j : g.adj(i))
                    if (mask >> j & 1) ok = false;
        if (ok) ++out[static_cast<std::size_t>(__builtin_popcount(mask))];
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

// matchings by size, over all edge subsets
std::vector<std::size_t> brute_matching_counts(const Graph& g) {
    const auto es = g.edges();
    const std::size_t k = es.size();
    std::vector<std::size_t> out(k + 1, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::set<Label> used;
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i)
            if (mask >> i & 1) ok = used.insert(es[i].first).second && used.insert(es[i].second).second;
        if (ok) ++out[static_cast<std::size_t>(__builtin_popcountll(mask))];
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

// independent k-sets of P_n: C(n - k + 1, k), via the recurrence on the last vertex
std::vector<std::size_t> path_counts(int n) {
    std::vector<std::vector<std::size_t>> c(static_cast<std::size_t>(n + 2));
    c[0] = {1};
    c[1] = {1, 1};
    for (int i = 2; i <= n; ++i) {
        auto& r = c[static_cast<std::size_t>(i)];
        const auto& a = c[static_cast<std::size_t>(i - 1)];
        const auto& b = c[static_cast<std::size_t>(i - 2)];
        r.assign(std::max(a.size(), b.size() + 1), 0);
        for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
        for (std::size_t k = 0; k < b.size(); ++k) r[k + 1] += b[k];
    }
    return c[static_cast<std::size_t>(n)];
}

} // namespace

TEST_CASE("conventions for the void complex and {empty set}") {
    const auto v = SimplicialComplex::void_complex();
    REQUIRE(v.is_void());
    REQUIRE(v.dim() == -2);
    REQUIRE(v.total() == 0);
    const auto e = SimplicialComplex::empty_complex();
    REQUIRE_FALSE(e.is_void());
    REQUIRE(e.dim() == -1);
    REQUIRE(e.count(-1) == 1);
    REQUIRE(independence_complex(Graph()).dim() == -1);
    // the line graph of an edgeless graph has no vertices at all
    REQUIRE(matching_complex(edgeless(3)).is_void());
    REQUIRE(matching_complex(path(2)).dim() == 0);
}

TEST_CASE("Ind f-vectors agree with subset enumeration") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = static_cast<int>(rng() % 13);
        const Graph g = random_graph(rng, n, 0.1 + 0.08 * static_cast<double>(trial % 10));
        REQUIRE(independence_complex(g).f_vector() == brute_independent_counts(g));
    }
}

TEST_CASE("Ind of paths counts independent sets") {
    for (int n = 1; n <= 30; ++n) REQUIRE(independence_complex(path(n)).f_vector() == path_counts(n));
}

TEST_CASE("matching complex f-vectors agree with edge-subset enumeration") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const Graph g = random_graph(rng, n, 0.45);
        if (g.size() > 18) continue;
        if (g.size() == 0) {
            REQUIRE(matching_complex(g).is_void());
            continue;
        }
        REQUIRE(matching_complex(g).f_vector() == brute_matching_counts(g));
    }
}

TEST_CASE("simplices are sorted and found by index") {
    const auto c = independence_complex(cycle(9));
    for (int d = 0; d <= c.dim(); ++d)
        for (std::size_t i = 0; i < c.count(d); ++i) {
            auto s = c.simplex(d, i);
            REQUIRE(std::is_sorted(s.begin(), s.end()));
            REQUIRE(c.find(s) == static_cast<long>(i));
        }
    const std::vector<SimplicialComplex::Vertex> edge{0, 1};
    REQUIRE(c.find(edge) == -1);
}

TEST_CASE("max_dim truncates the enumeration") {
    const auto full = independence_complex(path(12));
    const auto cut = independence_complex(path(12), 2);
    REQUIRE(cut.dim() == 2);
    for (int d = -1; d <= 2; ++d) REQUIRE(cut.count(d) == full.count(d));
}

TEST_CASE("the simplex budget aborts enumeration") {
    REQUIRE_THROWS_AS(independence_complex(edgeless(20), std::nullopt, Budget{1000, 1000}), BudgetExceeded);
    REQUIRE_NOTHROW(independence_complex(edgeless(9), std::nullopt, Budget{512, 1000}));
}

TEST_CASE("from_facets takes the downward closure") {
    const auto c = SimplicialComplex::from_facets(4, {{0, 1, 2}, {2, 3}});
    REQUIRE(c.f_vector() == std::vector<std::size_t>{1, 4, 4, 1});
    REQUIRE(c.contains({0, 2}));
    REQUIRE_FALSE(c.contains({1, 3}));
}

TEST_CASE("join multiplies f-polynomials and is void with a void factor") {
    const auto a = independence_complex(path(4));
    const auto b = independence_complex(cycle(5));
    const auto j = join(a, b);
    const auto& fa = a.f_vector();
    const auto& fb = b.f_vector();
    std::vector<std::size_t> expect(fa.size() + fb.size() - 1, 0);
    for (std::size_t i = 0; i < fa.size(); ++i)
        for (std::size_t k = 0; k < fb.size(); ++k) expect[i + k] += fa[i] * fb[k];
    REQUIRE(j.f_vector() == expect);
    REQUIRE(join(a, SimplicialComplex::void_complex()).is_void());
    REQUIRE(join(a, SimplicialComplex::empty_complex()).f_vector() == fa);
    // Ind of a disjoint union is the join
    const Graph u = disjoint_union(path(4), Graph({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "a"}}));
    REQUIRE(independence_complex(u).f_vector() == expect);
}
