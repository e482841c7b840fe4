#include <doctest.h>

#include "fixtures.hpp"
#include "graft/distance.hpp"
#include "graft/join.hpp"
#include "graft/oracle.hpp"

using namespace graft;

TEST_CASE("is_join") {
    Graft p = fixtures::path3_ends();
    CHECK(is_join(p, {0, 1}));
    CHECK_FALSE(is_join(p, {0}));
    CHECK(is_join(Graft(fixtures::path3(), {}), {}));
    CHECK_THROWS_AS(is_join(p, {42}), InputError);
}

TEST_CASE("minimum joins on small fixtures") {
    SUBCASE("single edge") {
        Graft g(fixtures::graph({"a", "b"}, {{"a", "b"}}), {"a", "b"});
        JoinCertificate c = min_join(g);
        CHECK(c.size == 1);
        CHECK(c.edges == EdgeSet{0});
        CHECK(c.minimum);
    }
    SUBCASE("path with terminal ends") {
        Graft g = fixtures::path3_ends();
        CHECK(nu(g) == 2);
        CHECK(min_join(g).edges == EdgeSet{0, 1});
        CHECK(oracle::brute_nu(g) == 2);
        CHECK(oracle::enumerate_minimum_joins(g) ==
              std::vector<EdgeSet>{EdgeSet{0, 1}});
    }
    SUBCASE("4-cycle, all terminals") {
        Graft g = fixtures::cycle4_all();
        CHECK(nu(g) == 2);
        EdgeSet f = min_join(g).edges;
        bool opposite = (f == EdgeSet{0, 2}) || (f == EdgeSet{1, 3});
        CHECK(opposite);
        CHECK(oracle::brute_nu(g) == 2);
    }
    SUBCASE("star, all terminals") {
        Graft g = fixtures::star3_all();
        CHECK(nu(g) == 3);
        CHECK(min_join(g).edges == EdgeSet{0, 1, 2});
    }
    SUBCASE("no terminals") {
        CHECK(nu(Graft(fixtures::triangle(), {})) == 0);
        CHECK(min_join(Graft(fixtures::triangle(), {})).edges.empty());
        CHECK(nu(Graft(Graph(), {})) == 0);
    }
}

TEST_CASE("is_minimum_join") {
    Graft p = fixtures::path3_ends();
    CHECK(is_minimum_join(p, {0, 1}));
    CHECK_FALSE(is_minimum_join(p, {0}));
    Graft c4 = fixtures::cycle4_all();
    CHECK_FALSE(is_minimum_join(c4, c4.graph().edge_ids())); // not even a join
    CHECK(is_minimum_join(Graft(fixtures::triangle(), {}), {}));
}

TEST_CASE("allowed edges") {
    CHECK(allowed_edges(fixtures::path3_ends()) == EdgeSet{0, 1});
    CHECK(allowed_edges(fixtures::cycle4_all()) == EdgeSet{0, 1, 2, 3});
    CHECK(allowed_edges(Graft(fixtures::triangle(), {})).empty());

    SUBCASE("bridge deletion handled via the no-join sentinel") {
        // path a-b with no terminals: deleting ab separates a and b, so ab
        // can never be allowed
        Graft g(fixtures::graph({"a", "b"}, {{"a", "b"}}), {});
        CHECK(allowed_edges(g).empty());
    }
}

TEST_CASE("solver agrees with the exhaustive oracle on streamed instances") {
    oracle::StreamParams params;
    params.exhaustive_max_n = 4;
    params.dedup = false;
    oracle::InstanceStream stream(params);
    int count = 0;
    while (std::optional<Graft> g = stream.next()) {
        ++count;
        JoinSolver solver(*g);
        CHECK(solver.nu() == oracle::brute_nu(*g));
        CHECK(solver.allowed() == oracle::brute_allowed(*g));
        CHECK(is_minimum_join(*g, solver.min_join()));
    }
    CHECK(count > 100);
}

TEST_CASE("solver agrees with the oracle on random grafts up to n=7") {
    oracle::StreamParams params;
    params.exhaustive_max_n = 0;
    params.random_count = 250;
    params.random_max_n = 7;
    params.seed = 31337;
    oracle::InstanceStream stream(params);
    while (std::optional<Graft> g = stream.next()) {
        if (g->graph().edge_count() > 16) continue;
        JoinSolver solver(*g);
        oracle::JoinTable table(g->graph());
        CHECK(solver.nu() == *table.nu_of(g->terminals()));
        CHECK(solver.allowed() == oracle::brute_allowed(*g));
        CHECK(is_minimum_join(*g, solver.min_join()));
        const auto& vs = g->graph().vertices();
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j) {
                if (!solver.same_component(vs[i], vs[j])) continue;
                VertexSet toggled =
                    symmetric_difference(g->terminals(), {vs[i], vs[j]});
                CHECK(dist(solver, vs[i], vs[j]) ==
                      *table.nu_of(toggled) - *table.nu_of(g->terminals()));
            }
    }
}

TEST_CASE("symmetric difference of two joins is a join for empty terminals") {
    oracle::StreamParams params;
    params.exhaustive_max_n = 4;
    params.dedup = true;
    oracle::InstanceStream stream(params);
    while (std::optional<Graft> g = stream.next()) {
        auto joins = oracle::enumerate_joins(*g);
        Graft empty_t(g->graph(), {});
        for (size_t i = 0; i < joins.size(); ++i)
            for (size_t j = i + 1; j < joins.size() && j < i + 4; ++j)
                CHECK(is_join(empty_t, symmetric_difference(joins[i], joins[j])));
    }
}

TEST_CASE("minimum joins equal perfect matchings when every vertex is terminal") {
    oracle::StreamParams params;
    params.exhaustive_max_n = 5;
    params.dedup = true;
    oracle::InstanceStream stream(params);
    while (std::optional<Graft> g = stream.next()) {
        if (g->terminals() != g->graph().vertex_set()) continue;
        if (!oracle::is_factorizable(g->graph())) continue;
        int n = g->graph().vertex_count();
        for (const EdgeSet& f : oracle::enumerate_minimum_joins(*g)) {
            CHECK(static_cast<int>(f.size()) == n / 2); // a 1-factor
            std::set<VertexId> covered;
            for (EdgeId id : f) {
                auto [a, b] = g->graph().endpoints(id);
                CHECK(covered.insert(a).second);
                CHECK(covered.insert(b).second);
            }
        }
        CHECK(JoinSolver(*g).nu() == n / 2);
    }
}

TEST_CASE("circuit criterion for minimum joins") {
    oracle::StreamParams params;
    params.exhaustive_max_n = 4;
    params.dedup = true;
    oracle::InstanceStream stream(params);
    while (std::optional<Graft> g = stream.next()) {
        int best = oracle::brute_nu(*g);
        auto circuits = oracle::simple_circuits(g->graph());
        for (const EdgeSet& f : oracle::enumerate_joins(*g)) {
            bool minimum = static_cast<int>(f.size()) == best;
            bool conservative = true;
            for (const EdgeSet& c : circuits) {
                int w = 0;
                for (EdgeId id : c) w += f.count(id) ? -1 : 1;
                if (w < 0) conservative = false;
            }
            CHECK(minimum == conservative);
        }
    }
}

TEST_CASE("solver handles contracted graphs with parallel edges") {
    // contracting opposite sides of the 4-cycle leaves two vertices joined
    // by the two surviving edges 23 and 41
    Contraction c = contract(fixtures::cycle4(), {VertexSet{"1", "2"}, VertexSet{"3", "4"}});
    REQUIRE(c.graph.edge_count() == 2);
    Graft g(c.graph, c.graph.vertex_set());
    JoinSolver solver(g);
    CHECK(solver.nu() == 1);
    CHECK(solver.min_join() == EdgeSet{1}); // smaller edge id wins
    CHECK(solver.allowed() == EdgeSet{1, 3});
    CHECK(is_join(g, {3}));
    CHECK_FALSE(is_join(g, {1, 3}));
    CHECK(dist(g, "[1]", "[3]") == -1);
}

TEST_CASE("nu memoization returns consistent values") {
    Graft g = fixtures::cycle4_all();
    JoinSolver solver(g);
    CHECK(solver.nu() == 2);
    CHECK(solver.nu() == 2);
    CHECK(solver.nu_of({"1", "3"}) == 2);
    CHECK(solver.nu_of({"1", "2"}) == 1);
    CHECK(solver.nu_of({}) == 0);
    CHECK_THROWS_AS(solver.nu_of({"1"}), InputError);
    CHECK(!solver.nu_if_graft({"1"}));
}
