#include <catch_amalgamated.hpp>

#include <random>

#include <matchtop/reduction.hpp>
#include <matchtop/verify.hpp>

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

HomologyProfile ind(const Graph& g) { return reduced_homology(independence_complex(g)); }

HomologyProfile suspended_wedge(const std::vector<Graph>& gs) {
    std::vector<HomologyProfile> ps;
    for (const auto& g : gs) ps.push_back(suspend(ind(g), 1));
    return wedge(ps);
}

} // namespace

TEST_CASE("folds preserve Ind homology") {
    std::mt19937_64 rng(51);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 10), 0.3);
        const auto h = ind(g);
        for (const auto& f : find_folds(g)) {
            REQUIRE(is_fold_pair(g, f.v, f.w));
            REQUIRE(ind(apply_fold(g, f.v, f.w)) == h);
            ++checked;
        }
    }
    REQUIRE(checked > 100);
}

TEST_CASE("edge toggles at edge-invariant triplets preserve Ind homology") {
    std::mt19937_64 rng(52);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = random_graph(rng, 3 + static_cast<int>(rng() % 8), 0.35);
        const auto h = ind(g);
        for (const auto& t : find_edge_invariant_triplets(g)) {
            REQUIRE(t.edge_present == g.has_edge(t.u, t.v));
            REQUIRE(ind(toggle_edge(g, t.u, t.v, t.x)) == h);
            ++checked;
        }
    }
    REQUIRE(checked > 100);
}

TEST_CASE("simplicial splits give a wedge of suspended branches") {
    std::mt19937_64 rng(53);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 10), 0.3);
        const auto h = ind(g);
        for (const auto& v : simplicial_vertices(g)) {
            REQUIRE(suspended_wedge(simplicial_split(g, v).branches) == h);
            ++checked;
        }
    }
    REQUIRE(checked > 100);
}

TEST_CASE("cone-witnessed link/deletion splits are sound") {
    std::mt19937_64 rng(54);
    int checked = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 9), 0.35);
        const auto h = ind(g);
        for (const auto& v : g.vertices())
            for (const auto& u : g.vertices()) {
                if (!is_cone_witness(g, v, u)) continue;
                auto ld = link_deletion_split(g, v, u);
                REQUIRE(wedge({ind(ld.deletion), suspend(ind(ld.link), 1)}) == h);
                ++checked;
            }
    }
    REQUIRE(checked > 100);
}

TEST_CASE("rule preconditions are enforced") {
    const Graph p = path(4);
    REQUIRE_THROWS_AS(apply_fold(p, Label(2), Label(1)), PreconditionError);
    REQUIRE_NOTHROW(apply_fold(p, Label(1), Label(3)));
    REQUIRE_THROWS_AS(toggle_edge(p, Label(1), Label(2), Label(3)), PreconditionError);
    REQUIRE_THROWS_AS(simplicial_split(p, Label(2)), PreconditionError);
    REQUIRE_THROWS_AS(simplicial_split(edgeless(2), Label(1)), PreconditionError);
    REQUIRE_THROWS_AS(link_deletion_split(cycle(6), Label(1), Label(4)), PreconditionError);
    REQUIRE_FALSE(is_cone_witness(p, Label(1), Label(1)));
}

TEST_CASE("trace expressions evaluate to the initial homology") {
    // a pendant vertex cones off the link of its neighbour
    const Graph g = cycle(7).add_edge(Label(1), Label(5)).delete_vertex(Label(7));
    ReductionTrace t(g);
    t.link_deletion(0, Label(5), Label(6));
    REQUIRE(t.expression().str() == "(L1 v S(L2))");
    t.components(2);
    const auto c = check_trace(t);
    REQUIRE(c.consistent());
    REQUIRE(c.initial == ind(g));
}

TEST_CASE("components: K2 parts suspend, isolated vertices contract, all-K2 leaves the empty graph") {
    const Graph two_edges({1, 2, 3, 4}, {{1, 2}, {3, 4}});
    ReductionTrace t(two_edges);
    t.components(0);
    REQUIRE(t.leaves().size() == 1);
    REQUIRE(t.leaves().begin()->second.empty());
    REQUIRE(check_trace(t).consistent());
    REQUIRE(check_trace(t).composed.b(1) == 1);

    ReductionTrace u(disjoint_union(path(3), Graph({"a", "b"}, {{"a", "b"}})));
    u.components(0);
    REQUIRE(check_trace(u).consistent());

    ReductionTrace w(Graph({1, 2, 3}, {{1, 2}}));
    w.components(0);
    REQUIRE(w.expression().kind == Expr::Kind::Point);
    REQUIRE(check_trace(w).consistent());
}

TEST_CASE("auto_reduce folds to a fixed point") {
    for (int n = 1; n <= 12; ++n) {
        auto t = auto_reduce(path(n));
        REQUIRE(check_trace(t).consistent());
        if (!t.leaves().empty()) REQUIRE(find_folds(t.leaf(0)).empty());
    }
}

TEST_CASE("replayed fixtures are consistent on small members") {
    Budget b;
    int checked = 0;
    for (const auto& fx : detail::load_fixtures(VerifyOptions{}.fixture_dir)) {
        const auto fam = FamilyId::parse(fx.family + ":" + std::to_string(fx.n_lo));
        INFO(fx.file);
        const Graph g = build(fam);
        if (g.order() > 30) continue;
        REQUIRE(check_trace(replay(fx.script, g, fam), b).consistent());
        ++checked;
    }
    REQUIRE(checked >= 5);
}

TEST_CASE("script errors name the failing step") {
    const auto script = nlohmann::json::parse(R"J([
        {"rule": "fold", "v": "1", "w": "3"},
        {"rule": "fold", "v": "2", "w": "4"}
    ])J");
    try {
        replay(script, path(5));
        FAIL("expected a script error");
    } catch (const ScriptError& e) {
        REQUIRE(e.step == 1);
    }
    REQUIRE_THROWS_AS(replay(nlohmann::json::parse(R"J([{"rule": "teleport"}])J"), path(3)), ScriptError);
    REQUIRE_THROWS_AS(replay(nlohmann::json::parse(R"J([{"rule": "expect", "isomorphic_to": "P4"}])J"), path(3)), ScriptError);
    REQUIRE_NOTHROW(replay(nlohmann::json::parse(R"J({"steps": [{"rule": "expect", "isomorphic_to": "P3"}]})J"), path(3)));
}

TEST_CASE("trace json lists steps, expression and live leaves") {
    const auto t = replay(nlohmann::json::parse(R"J([{"rule": "split", "v": "1"}])J"), path(5));
    const auto j = t.to_json();
    REQUIRE(j.at("steps").size() == 1);
    REQUIRE(j.at("steps")[0].at("rule") == "simplicial_split");
    REQUIRE(j.at("leaves").size() == 1);
    REQUIRE(j.at("expression_text") == "S(L1)");
}
