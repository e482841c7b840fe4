#include <doctest.h>

#include "fixtures.hpp"
#include "graft/distance.hpp"
#include "graft/oracle.hpp"
#include "graft/structure.hpp"

using namespace graft;

TEST_CASE("join weighting and path weight") {
    Graft p = fixtures::path3_ends();
    JoinWeighting w(p, {0, 1});
    CHECK(w.weight(0) == -1);
    CHECK(w.weight(1) == -1);
    CHECK_THROWS_AS(w.weight(9), InputError);
    CHECK_THROWS_AS(JoinWeighting(p, {9}), InputError);

    CHECK(path_weight(w, Path{{"a"}, {}}) == 0);
    CHECK(path_weight(w, Path{{"a", "b", "c"}, {0, 1}}) == -2);
    CHECK_THROWS_AS(path_weight(w, Path{{"a", "c"}, {0}}), InputError);

    Graft c4 = fixtures::cycle4_all();
    JoinWeighting wc(c4, {0, 2}); // join {12, 34}
    CHECK(path_weight(wc, Path{{"1", "2", "3"}, {0, 1}}) == 0);
}

TEST_CASE("distances on the small fixtures") {
    SUBCASE("reflexive") {
        CHECK(dist(fixtures::path3_ends(), "a", "a") == 0);
    }
    SUBCASE("path") {
        Graft g = fixtures::path3_ends();
        JoinSolver solver(g);
        CHECK(dist(solver, "a", "c") == -2);
        CHECK(dist(solver, "a", "b") == -1);
        CHECK(dist(solver, "b", "c") == -1);
    }
    SUBCASE("4-cycle") {
        Graft g = fixtures::cycle4_all();
        JoinSolver solver(g);
        CHECK(dist(solver, "1", "3") == 0);
        CHECK(dist(solver, "1", "2") == -1);
    }
    SUBCASE("single edge") {
        Graft g(fixtures::graph({"a", "b"}, {{"a", "b"}}), {"a", "b"});
        CHECK(dist(g, "a", "b") == -1);
    }
    SUBCASE("cross-component queries fail loudly") {
        Graft g(fixtures::graph({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}), {});
        CHECK_THROWS_AS(dist(g, "a", "c"), DomainError);
        CHECK_THROWS_AS(dist(g, "a", "zzz"), InputError);
    }
}

TEST_CASE("distance table") {
    SUBCASE("single vertex") {
        Graft g(fixtures::graph({"v"}, {}), {});
        DistanceTable t = distance_table(g);
        CHECK(t.entries.size() == 1);
        CHECK(t.at("v", "v") == 0);
    }
    SUBCASE("path") {
        DistanceTable t = distance_table(fixtures::path3_ends());
        CHECK(t.at("a", "b") == -1);
        CHECK(t.at("b", "c") == -1);
        CHECK(t.at("a", "c") == -2);
        CHECK(t.at("c", "a") == -2); // symmetric lookup
        CHECK(t.at("b", "b") == 0);
    }
    SUBCASE("cross-component pairs are absent") {
        Graft g(fixtures::graph({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}),
                {"a", "b"});
        DistanceTable t = distance_table(g);
        CHECK(t.contains("a", "b"));
        CHECK_FALSE(t.contains("a", "c"));
        CHECK_THROWS_AS(t.at("a", "c"), DomainError);
    }
}

TEST_CASE("distance is independent of the minimum join") {
    oracle::StreamParams params;
    params.exhaustive_max_n = 4;
    params.dedup = false;
    oracle::InstanceStream stream(params);
    while (std::optional<Graft> g = stream.next()) {
        JoinSolver solver(*g);
        auto min_joins = oracle::enumerate_minimum_joins(*g);
        const auto& vs = g->graph().vertices();
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j) {
                if (!solver.same_component(vs[i], vs[j])) continue;
                int d = dist(solver, vs[i], vs[j]);
                for (const EdgeSet& f : min_joins) {
                    auto p = oracle::min_weight_simple_path(g->graph(), f, vs[i], vs[j]);
                    REQUIRE(p);
                    CHECK(weight_under(f, p->edges) == d);
                }
            }
    }
}

TEST_CASE("factor-connected vertices are at distance <= 0") {
    oracle::StreamParams params;
    params.exhaustive_max_n = 4;
    params.dedup = true;
    oracle::InstanceStream stream(params);
    while (std::optional<Graft> g = stream.next()) {
        JoinSolver solver(*g);
        for (const FactorComponent& fc : factor_components(solver))
            for (const VertexId& u : fc.vertices)
                for (const VertexId& v : fc.vertices)
                    if (u < v) CHECK(dist(solver, u, v) <= 0);
    }
}
