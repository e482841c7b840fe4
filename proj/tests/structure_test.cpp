#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "graft/oracle.hpp"
#include "graft/structure.hpp"

using namespace graft;

TEST_CASE("factor components") {
    SUBCASE("path spans one component") {
        auto comps = factor_components(fixtures::path3_ends());
        REQUIRE(comps.size() == 1);
        CHECK(comps[0].vertices == VertexSet{"a", "b", "c"});
        CHECK(comps[0].edges == EdgeSet{0, 1});
    }
    SUBCASE("no allowed edges: singletons") {
        auto comps = factor_components(Graft(fixtures::triangle(), {}));
        REQUIRE(comps.size() == 3);
        CHECK(comps[0].vertices == VertexSet{"a"});
        // non-allowed inner edges still belong to the induced edge set
        CHECK(comps[0].edges.empty());
    }
    SUBCASE("two disjoint terminal edges") {
        Graft g(fixtures::graph({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}),
                {"a", "b", "c", "d"});
        auto comps = factor_components(g);
        REQUIRE(comps.size() == 2);
        CHECK(comps[0].vertices == VertexSet{"a", "b"});
        CHECK(comps[1].vertices == VertexSet{"c", "d"});
    }
    SUBCASE("induced edges include non-allowed ones") {
        // triangle with two terminals: only ab is allowed, but the
        // component {a,b} spans no other vertices; singleton c.
        Graft g(fixtures::triangle(), {"a", "b"});
        auto comps = factor_components(g);
        REQUIRE(comps.size() == 2);
        CHECK(comps[0].vertices == VertexSet{"a", "b"});
        CHECK(comps[0].edges == EdgeSet{0});
    }
}

TEST_CASE("same_class") {
    JoinSolver c4(fixtures::cycle4_all());
    CHECK(same_class(c4, "1", "1"));
    CHECK(same_class(c4, "1", "3"));
    CHECK_FALSE(same_class(c4, "1", "2"));

    JoinSolver p(fixtures::path3_ends());
    CHECK_FALSE(same_class(p, "a", "c"));

    // distance 0 across factor-components does not relate vertices:
    // in the triangle with terminals {a,b}, dist(a,c)=0 but c sits in its
    // own factor-component.
    JoinSolver t(Graft(fixtures::triangle(), {"a", "b"}));
    CHECK(dist(t, "a", "c") == 0);
    CHECK_FALSE(same_class(t, "a", "c"));
}

TEST_CASE("kl partition") {
    SUBCASE("4-cycle") {
        KLPartition p = kl_partition(fixtures::cycle4_all());
        REQUIRE(p.classes.size() == 2);
        CHECK(p.classes[0] == VertexSet{"1", "3"});
        CHECK(p.classes[1] == VertexSet{"2", "4"});
        CHECK(p.class_component == std::vector<int>{0, 0});
    }
    SUBCASE("path: all singletons") {
        KLPartition p = kl_partition(fixtures::path3_ends());
        REQUIRE(p.classes.size() == 3);
        for (const VertexSet& c : p.classes) CHECK(c.size() == 1);
    }
    SUBCASE("classes partition the vertex set and stay inside components") {
        KLPartition p = kl_partition(fixtures::refinement_witness());
        VertexSet all;
        for (size_t c = 0; c < p.classes.size(); ++c) {
            for (const VertexId& v : p.classes[c]) {
                CHECK(all.insert(v).second);
                CHECK(p.components[p.class_component[c]].vertices.count(v) == 1);
            }
        }
        CHECK(all == fixtures::refinement_witness().graph().vertex_set());
    }
}

TEST_CASE("kl classes of component") {
    Graft g = fixtures::refinement_witness();
    KLPartition p = kl_partition(g);
    REQUIRE(p.components.size() == 2);
    auto classes = kl_classes_of_component(p, p.components[0]);
    REQUIRE(classes.size() == 3);
    CHECK(classes[0] == VertexSet{"1"});
    CHECK(classes[1] == VertexSet{"2", "4"});
    CHECK(classes[2] == VertexSet{"3"});

    // union over components recovers the partition
    std::vector<VertexSet> unioned;
    for (const FactorComponent& h : p.components)
        for (const VertexSet& c : kl_classes_of_component(p, h))
            unioned.push_back(c);
    CHECK(unioned.size() == p.classes.size());

    FactorComponent foreign{{"zzz"}, {}};
    CHECK_THROWS_AS(kl_classes_of_component(p, foreign), InputError);
}

TEST_CASE("kl partition matches the brute-force relation") {
    oracle::StreamParams params;
    params.exhaustive_max_n = 4;
    params.dedup = false;
    oracle::InstanceStream stream(params);
    while (std::optional<Graft> g = stream.next()) {
        KLPartition p = kl_partition(*g);
        CHECK(p.classes == oracle::brute_kl(*g));
    }
}

TEST_CASE("kl partition commutes with relabeling") {
    std::mt19937_64 rng(99);
    Graft g = fixtures::refinement_witness();
    std::vector<VertexId> names(g.graph().vertices());
    for (int round = 0; round < 10; ++round) {
        std::shuffle(names.begin(), names.end(), rng);
        std::map<VertexId, VertexId> rename;
        for (size_t i = 0; i < names.size(); ++i)
            rename[g.graph().vertices()[i]] = names[i];
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (const Graph::Edge& e : g.graph().edges())
            edges.push_back({rename[g.graph().id_of(e.u)], rename[g.graph().id_of(e.v)]});
        VertexSet terminals;
        for (const VertexId& t : g.terminals()) terminals.insert(rename[t]);
        Graft relabeled(Graph(names, edges), terminals);

        std::vector<VertexSet> expected;
        for (const VertexSet& cls : kl_partition(g).classes) {
            VertexSet mapped;
            for (const VertexId& v : cls) mapped.insert(rename[v]);
            expected.push_back(mapped);
        }
        std::sort(expected.begin(), expected.end(),
                  [](const VertexSet& a, const VertexSet& b) {
                      return *a.begin() < *b.begin();
                  });
        CHECK(kl_partition(relabeled).classes == expected);
    }
}

TEST_CASE("comb-bipartite recognition") {
    SUBCASE("star qualifies with the leaves as teeth") {
        auto view = is_comb_bipartite(fixtures::star3_all());
        REQUIRE(view);
        CHECK(view->spine == VertexSet{"c"});
        CHECK(view->tooth == VertexSet{"l1", "l2", "l3"});
        CHECK_FALSE(view->swap_also_valid);
    }
    SUBCASE("single edge qualifies either way") {
        Graft g(fixtures::graph({"a", "b"}, {{"a", "b"}}), {"a", "b"});
        auto view = is_comb_bipartite(g);
        REQUIRE(view);
        CHECK(view->swap_also_valid);
        CHECK(view->spine == VertexSet{"a"});
        CHECK(view->tooth == VertexSet{"b"});
    }
    SUBCASE("triangle is not bipartite") {
        CHECK_FALSE(is_comb_bipartite(Graft(fixtures::triangle(), {})));
    }
    SUBCASE("bipartite but tooth side fails") {
        // path with no terminals: neither side consists of terminals,
        // except the trivial empty... sides {a,c} and {b} both nonempty.
        CHECK_FALSE(is_comb_bipartite(Graft(fixtures::path3(), {})));
    }
    SUBCASE("explicit tooth check") {
        JoinSolver star(fixtures::star3_all());
        CHECK(comb_bipartite_with_tooth(star, {"l1", "l2", "l3"}));
        CHECK_FALSE(comb_bipartite_with_tooth(star, {"c"}));
        CHECK_FALSE(comb_bipartite_with_tooth(star, {"l1"}));
    }
    SUBCASE("single vertex graft") {
        JoinSolver one(Graft(fixtures::graph({"r"}, {}), {}));
        CHECK(comb_bipartite_with_tooth(one, {}));
    }
}

TEST_CASE("tooth saturation holds for every minimum join") {
    oracle::StreamParams params;
    params.exhaustive_max_n = 4;
    params.dedup = true;
    oracle::InstanceStream stream(params);
    while (std::optional<Graft> g = stream.next()) {
        JoinSolver solver(*g);
        auto view = is_comb_bipartite(solver);
        if (!view) continue;
        for (const EdgeSet& f : oracle::enumerate_minimum_joins(*g)) {
            for (const VertexId& t : view->tooth) {
                int deg = 0;
                for (EdgeId id : cut(g->graph(), {t}))
                    if (f.count(id)) ++deg;
                CHECK(deg == 1);
            }
        }
    }
}

TEST_CASE("factor-connected comb-bipartite grafts have spine-tooth distance -1") {
    oracle::StreamParams params;
    params.exhaustive_max_n = 5;
    params.dedup = true;
    oracle::InstanceStream stream(params);
    int seen = 0;
    while (std::optional<Graft> g = stream.next()) {
        JoinSolver solver(*g);
        auto view = is_comb_bipartite(solver);
        if (!view) continue;
        if (factor_components(solver).size() != 1) continue;
        ++seen;
        for (const VertexId& s : view->spine)
            for (const VertexId& t : view->tooth)
                CHECK(dist(solver, s, t) == -1);
    }
    CHECK(seen > 5);
}

TEST_CASE("refinement report") {
    SUBCASE("single component graft: partitions coincide") {
        auto report = refinement_report(fixtures::cycle4_all());
        REQUIRE(report.size() == 1);
        CHECK(report[0].refines);
        CHECK_FALSE(report[0].proper);
        CHECK(report[0].host_classes == report[0].standalone_classes);
    }
    SUBCASE("witness instance: proper refinement inside the cycle component") {
        auto report = refinement_report(fixtures::refinement_witness());
        REQUIRE(report.size() == 2);
        CHECK(report[0].refines);
        CHECK(report[0].proper);
        CHECK(report[0].host_classes ==
              std::vector<VertexSet>{{"1"}, {"2", "4"}, {"3"}});
        CHECK(report[0].standalone_classes ==
              std::vector<VertexSet>{{"1", "3"}, {"2", "4"}});
        CHECK(report[1].refines);
        CHECK_FALSE(report[1].proper);
    }
    SUBCASE("refinement holds on a small stream") {
        oracle::StreamParams params;
        params.exhaustive_max_n = 4;
        params.dedup = true;
        oracle::InstanceStream stream(params);
        while (std::optional<Graft> g = stream.next())
            for (const ComponentRefinement& r : refinement_report(*g))
                CHECK(r.refines);
    }
}

TEST_CASE("transitivity of the class relation") {
    oracle::StreamParams params;
    params.exhaustive_max_n = 4;
    params.dedup = false;
    params.random_count = 300;
    params.random_max_n = 8;
    params.seed = 5;
    oracle::InstanceStream stream(params);
    while (std::optional<Graft> g = stream.next()) {
        JoinSolver solver(*g);
        const auto& vs = g->graph().vertices();
        size_t n = vs.size();
        std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                rel[i][j] = same_class(solver, vs[i], vs[j]);
        for (size_t u = 0; u < n; ++u) {
            CHECK(rel[u][u]);
            for (size_t v = 0; v < n; ++v) {
                CHECK(rel[u][v] == rel[v][u]);
                for (size_t w = 0; w < n; ++w)
                    if (rel[u][v] && rel[v][w]) CHECK(rel[u][w]);
            }
        }
    }
}
