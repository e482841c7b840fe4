#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "graft/graft.hpp"
#include "graft/graph.hpp"

using namespace graft;

TEST_CASE("symmetric difference") {
    std::set<std::string> ac{"a", "c"};
    CHECK(symmetric_difference(ac, ac).empty());
    CHECK(symmetric_difference(ac, {}) == ac);
    CHECK(symmetric_difference(ac, {"a", "b"}) == std::set<std::string>{"b", "c"});
}

TEST_CASE("graph construction validates input") {
    CHECK_THROWS_AS(fixtures::graph({"a"}, {{"a", "a"}}), InputError);
    CHECK_THROWS_AS(fixtures::graph({"a", "b"}, {{"a", "c"}}), InputError);
    CHECK_THROWS_AS(fixtures::graph({"a", "b"}, {{"a", "b"}, {"b", "a"}}), InputError);
    CHECK_THROWS_AS(Graph({"a", "a"}, {}), InputError);
}

TEST_CASE("vertices are ordered lexicographically and edges keep ids") {
    Graph g = fixtures::graph({"b", "a", "c"}, {{"b", "a"}, {"c", "b"}});
    CHECK(g.vertices() == std::vector<VertexId>{"a", "b", "c"});
    CHECK(g.endpoints(0) == std::pair<VertexId, VertexId>{"a", "b"});
    CHECK(g.endpoints(1) == std::pair<VertexId, VertexId>{"b", "c"});
    CHECK(g.edge_between("a", "b") == 0);
    CHECK(!g.edge_between("a", "c"));
}

TEST_CASE("cut") {
    Graph p = fixtures::path3();
    CHECK(cut(p, {"b"}) == EdgeSet{0, 1});
    CHECK(cut(p, p.vertex_set()).empty());
    Graph c4 = fixtures::cycle4();
    CHECK(cut(c4, {"1", "2"}) == EdgeSet{1, 3});
    CHECK_THROWS_AS(cut(p, {"zzz"}), InputError);
}

TEST_CASE("induced edges") {
    Graph p = fixtures::path3();
    CHECK(induced_edges(p, {"a", "b"}) == EdgeSet{0});
    CHECK(induced_edges(p, {}).empty());
    CHECK(induced_edges(fixtures::cycle4(), {"1", "3"}).empty());
}

TEST_CASE("cut of X equals cut of complement") {
    Graph c4 = fixtures::cycle4();
    std::vector<VertexSet> subsets = {{}, {"1"}, {"1", "2"}, {"1", "3"},
                                      {"1", "2", "3"}};
    for (const VertexSet& x : subsets) {
        VertexSet complement;
        for (const VertexId& v : c4.vertices())
            if (!x.count(v)) complement.insert(v);
        CHECK(cut(c4, x) == cut(c4, complement));
        // inside(X) + cut(X) + inside(complement) partitions E
        EdgeSet all;
        for (EdgeId id : induced_edges(c4, x)) all.insert(id);
        for (EdgeId id : cut(c4, x)) CHECK(all.insert(id).second);
        for (EdgeId id : induced_edges(c4, complement)) CHECK(all.insert(id).second);
        CHECK(all == c4.edge_ids());
    }
}

TEST_CASE("connected components ordered by smallest vertex") {
    CHECK(connected_components(Graph()).empty());
    CHECK(connected_components(fixtures::path3()).size() == 1);
    Graph two = fixtures::graph({"a", "b", "c", "d"}, {{"c", "d"}, {"a", "b"}});
    auto comps = connected_components(two);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet{"a", "b"});
    CHECK(comps[1] == VertexSet{"c", "d"});
}

TEST_CASE("contraction") {
    Graph p = fixtures::path3();
    Contraction c = contract(p, {{VertexSet{"b", "c"}}});
    CHECK(c.graph.vertex_count() == 2);
    CHECK(c.vertex_map.at("b") == "[b]");
    CHECK(c.vertex_map.at("c") == "[b]");
    CHECK(c.vertex_map.at("a") == "a");
    CHECK(c.graph.endpoints(0) == std::pair<VertexId, VertexId>{"[b]", "a"});
    CHECK(c.dropped_loops == EdgeSet{1});
    CHECK(c.graph.contracted());

    SUBCASE("empty part list copies the graph with the identity mapping") {
        Contraction id = contract(p, {});
        CHECK(id.graph.vertex_count() == 3);
        CHECK(id.graph.edge_count() == 2);
        CHECK(id.dropped_loops.empty());
        for (const VertexId& v : p.vertices()) CHECK(id.vertex_map.at(v) == v);
    }

    SUBCASE("surviving edge ids map back to original endpoints") {
        Graph c4 = fixtures::cycle4();
        Contraction cc = contract(c4, {{VertexSet{"1", "2"}}});
        for (const Graph::Edge& e : cc.graph.edges()) {
            auto [a, b] = c4.endpoints(e.id);
            VertexSet mapped{cc.vertex_map.at(a), cc.vertex_map.at(b)};
            VertexSet stored{cc.graph.id_of(e.u), cc.graph.id_of(e.v)};
            CHECK(mapped == stored);
        }
    }

    SUBCASE("parallel edges from contraction are kept") {
        // both 1-2 and 4-3 end up between [1] and [3] after contracting
        // {1,4} and {2,3}
        Graph c4 = fixtures::cycle4();
        Contraction cc = contract(c4, {VertexSet{"1", "4"}, VertexSet{"2", "3"}});
        CHECK(cc.graph.vertex_count() == 2);
        CHECK(cc.graph.edge_count() == 2);
        CHECK(cc.dropped_loops == EdgeSet{1, 3});
    }

    SUBCASE("invalid parts are rejected") {
        CHECK_THROWS_AS(contract(p, {VertexSet{"a"}, VertexSet{"a", "b"}}),
                        InputError);
        CHECK_THROWS_AS(contract(p, {VertexSet{}}), InputError);
        CHECK_THROWS_AS(contract(p, {VertexSet{"a", "c"}}), InputError); // not connected
    }
}

TEST_CASE("is_graft") {
    Graph k2 = fixtures::graph({"a", "b"}, {{"a", "b"}});
    CHECK(is_graft(k2, {"a", "b"}));
    CHECK_FALSE(is_graft(k2, {"a"}));
    Graph isolated = fixtures::graph({"a", "b"}, {});
    CHECK_FALSE(is_graft(isolated, {"a", "b"}));
    CHECK(is_graft(isolated, {}));
    CHECK_THROWS_AS(is_graft(k2, {"zzz"}), InputError);

    CHECK_THROWS_AS(Graft(isolated, {"a", "b"}), InputError);
    CHECK_NOTHROW(Graft(Graph(), {}));
    try {
        Graft bad(isolated, {"a", "b"});
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("component {a}") != std::string::npos);
    }
}

TEST_CASE("is_graft is invariant under vertex relabeling") {
    std::mt19937_64 rng(7);
    Graph c4 = fixtures::cycle4();
    std::vector<VertexSet> terminal_choices = {
        {}, {"1", "2"}, {"1", "3"}, {"1", "2", "3", "4"}, {"1"}, {"1", "2", "3"}};
    std::vector<VertexId> names = {"p", "q", "r", "s"};
    for (int round = 0; round < 20; ++round) {
        std::shuffle(names.begin(), names.end(), rng);
        std::map<VertexId, VertexId> rename;
        for (size_t i = 0; i < names.size(); ++i)
            rename[c4.vertices()[i]] = names[i];
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (const Graph::Edge& e : c4.edges())
            edges.push_back(
                {rename[c4.id_of(e.u)], rename[c4.id_of(e.v)]});
        Graph relabeled(names, edges);
        for (const VertexSet& t : terminal_choices) {
            VertexSet rt;
            for (const VertexId& v : t) rt.insert(rename[v]);
            CHECK(is_graft(c4, t) == is_graft(relabeled, rt));
        }
    }
}

TEST_CASE("path validation") {
    Graph p = fixtures::path3();
    CHECK(Path{{"a"}, {}}.valid_in(p));
    CHECK(Path{{"a", "b", "c"}, {0, 1}}.valid_in(p));
    CHECK_FALSE(Path{{}, {}}.valid_in(p));
    CHECK_FALSE(Path{{"a", "c"}, {0}}.valid_in(p));          // wrong edge
    CHECK_FALSE(Path{{"a", "b", "a"}, {0, 0}}.valid_in(p));  // revisits a
}
