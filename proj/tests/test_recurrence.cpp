#include <catch_amalgamated.hpp>

#include <matchtop/recurrence.hpp>
#include <matchtop/tables.hpp>

using namespace matchtop;

namespace {

HomologyProfile ind(const Graph& g) { return reduced_homology(independence_complex(g)); }

} // namespace

TEST_CASE("descriptor algebra") {
    const auto a = WedgeDescriptor::sphere(2, 3);
    const auto b = WedgeDescriptor::spheres({{1, 2}, {4, 1}});
    REQUIRE(suspend(a, 2) == WedgeDescriptor::sphere(4, 3));
    REQUIRE(wedge({a, b}).str() == "2S^1 v 3S^2 v S^4");
    REQUIRE(join_desc(a, b) == WedgeDescriptor::spheres({{4, 6}, {7, 3}}));
    REQUIRE(join_desc(a, WedgeDescriptor::point()).is_contractible());
    REQUIRE(join_desc(a, WedgeDescriptor::void_complex()).is_void());
    REQUIRE(join_desc(a, WedgeDescriptor::sphere(-1)) == a);
    REQUIRE(wedge_power(a, 4) == WedgeDescriptor::sphere(2, 12));
    REQUIRE(wedge_power(a, 0).is_contractible());
    REQUIRE(WedgeDescriptor::point().str() == "point");
    REQUIRE(WedgeDescriptor::void_complex().str() == "void");
    REQUIRE_THROWS(suspend(WedgeDescriptor::void_complex(), 1));
}

TEST_CASE("descriptor and profile joins agree") {
    const std::vector<WedgeDescriptor> ws{WedgeDescriptor::point(), WedgeDescriptor::sphere(-1), WedgeDescriptor::sphere(0, 2),
                                          WedgeDescriptor::spheres({{1, 3}, {2, 1}}), WedgeDescriptor::void_complex()};
    for (const auto& x : ws)
        for (const auto& y : ws) REQUIRE(join_desc(x, y).matches(join(x.to_profile(), y.to_profile())));
}

TEST_CASE("descriptor <-> profile") {
    const auto w = WedgeDescriptor::spheres({{3, 5}, {5, 2}});
    REQUIRE(w.matches(w.to_profile()));
    REQUIRE(WedgeDescriptor::from_profile(w.to_profile()) == w);
    HomologyProfile t;
    t.set(1, 0, {BigInt(2)});
    REQUIRE_FALSE(WedgeDescriptor::from_profile(t).has_value());
    REQUIRE_FALSE(WedgeDescriptor::point().matches(t));
    REQUIRE(w.min_dim() == 3);
    REQUIRE(w.max_dim() == 5);
    REQUIRE(w.total() == 7);
}

TEST_CASE("path and cycle laws agree with direct homology") {
    REQUIRE(path_law(0).matches(ind(Graph())));
    for (int k = 1; k <= 21; ++k) REQUIRE(path_law(k).matches(ind(path(k))));
    for (int n = 3; n <= 21; ++n) REQUIRE(cycle_law(n).matches(ind(cycle(n))));
}

TEST_CASE("predictor: bases win, recurrences fill in, undefined members throw") {
    Predictor p;
    const auto& r = recurrence_rule(Family::Gamma, 3);
    REQUIRE(p.predict({Family::Gamma, 3, 0}) == r.bases.at(0));
    REQUIRE(p.apply(r, 1) == suspend(p.predict({Family::Gamma, 3, 0}), 1));
    REQUIRE_THROWS_AS(p.predict({Family::E, 4, 1}), FamilyError);
    REQUIRE_THROWS_AS(p.apply(recurrence_rule(Family::Gamma, 5), 1), FamilyError);
    REQUIRE_THROWS(recurrence_rule(Family::E, 3));
}

TEST_CASE("every constructible family has exactly one rule") {
    for (int m = 3; m <= 5; ++m)
        for (Family f : all_families) {
            int count = 0;
            for (const auto& r : recurrence_table())
                if (r.family == f && r.m == m) ++count;
            REQUIRE(count == (is_constructible({f, m, 0}) ? 1 : 0));
        }
    for (const auto& a : amendments()) {
        bool found = false;
        for (const auto& r : recurrence_table()) found = found || r.id == a.rule_id;
        REQUIRE(found);
    }
}

TEST_CASE("m = 3 recurrences reproduce the closed forms") {
    Predictor p;
    for (Family f : {Family::Gamma, Family::A, Family::Lambda, Family::LambdaTilde})
        for (int n = 0; n <= 60; ++n) REQUIRE(p.predict({f, 3, n}) == closed_form_family_m3({f, 3, n}));
    for (int n = 2; n <= 60; ++n)
        REQUIRE(predict_matching(n, 3) == WedgeDescriptor::sphere(closed_form_dim_m3(n), closed_form_count(n)));
}

TEST_CASE("amended table matches direct homology on small members") {
    Predictor p(amended_recurrence_table());
    for (int m = 3; m <= 5; ++m)
        for (const auto& id : family_members(m, -1, m == 5 ? 2 : 3)) {
            INFO(id.str());
            REQUIRE(p.predict(id).matches(ind(build(id))));
        }
}

TEST_CASE("small matching complexes") {
    for (int n = 2; n <= 6; ++n)
        for (int m = 1; m <= 4; ++m) {
            if (n * m > 20) continue;
            INFO(n << "x" << m);
            Predictor p(amended_recurrence_table());
            REQUIRE(predict_matching(n, m, p)
                        .matches(reduced_homology(matching_complex(categorical_product(path(n), path(m))))));
        }
}

TEST_CASE("m = 3 closed forms") {
    REQUIRE(closed_form_count(5) == 7);
    REQUIRE(closed_form_dim_m3(5) == 3);
    REQUIRE(closed_form_count(4) == 1);
    REQUIRE(closed_form_dim_m3(4) == 3);
    REQUIRE_THROWS_AS(closed_form_dims(2, 5), std::out_of_range);
    REQUIRE_THROWS_AS(closed_form_dims(5, 3), std::out_of_range);
}
