#include "graft/sebo.hpp"

#include <algorithm>
#include <sstream>

#include "graft/oracle.hpp"

namespace graft {

namespace {

std::string join_ids(const VertexSet& s) {
    std::string out;
    for (const VertexId& v : s) {
        if (!out.empty()) out += ", ";
        out += v;
    }
    return out;
}

/// Sub-graft on a negative component K with the terminal set
/// (T ∩ V(K)) △ {anchor_inner}.
Graft inner_graft(const SeboDecomposition& d, const NegativeComponent& k) {
    Graph sub = d.host.graph().induced_subgraph(k.vertices);
    VertexSet t;
    for (const VertexId& v : k.vertices)
        if (d.host.is_terminal(v)) t.insert(v);
    if (k.anchor_inner) t = symmetric_difference(t, {*k.anchor_inner});
    return Graft(std::move(sub), std::move(t));
}

EdgeSet inner_join(const SeboDecomposition& d, const NegativeComponent& k) {
    EdgeSet f;
    for (EdgeId id : k.edges)
        if (d.join.count(id)) f.insert(id);
    return f;
}

} // namespace

EdgeSet SeboDecomposition::contracted_join() const {
    EdgeSet out;
    for (const NegativeComponent& k : components)
        if (k.anchor_edge) out.insert(*k.anchor_edge);
    return out;
}

SeboDecomposition sebo_decomposition(const Graft& g, const EdgeSet& join,
                                     const VertexId& root) {
    g.graph().index_of(root);
    if (!is_minimum_join(g, join))
        throw InputError("not a minimum join of the host graft");

    SeboDecomposition d;
    d.host = g;
    d.root = root;
    d.join = join;

    JoinSolver solver(g);
    for (const VertexId& v : g.graph().vertices()) {
        if (!solver.same_component(root, v)) continue;
        int dv = dist(solver, root, v);
        if (dv == 0)
            d.level0.insert(v);
        else if (dv < 0)
            d.negative.insert(v);
    }

    // Core: component of the root after removing level-0 inner edges from
    // the subgraph induced by the level <= 0 vertices.
    VertexSet level_le;
    level_le.insert(d.level0.begin(), d.level0.end());
    level_le.insert(d.negative.begin(), d.negative.end());
    EdgeSet kept = induced_edges(g.graph(), level_le);
    for (EdgeId id : induced_edges(g.graph(), d.level0)) kept.erase(id);
    Graph layered = g.graph().subgraph(level_le, kept);
    for (const VertexSet& comp : connected_components(layered)) {
        if (comp.count(root)) {
            d.core = comp;
            break;
        }
    }
    d.core_graph = layered.induced_subgraph(d.core);

    // Negative components of the core.
    VertexSet inner;
    for (const VertexId& v : d.core)
        if (!d.level0.count(v)) inner.insert(v);
    std::vector<VertexSet> parts;
    if (!inner.empty())
        parts = connected_components(d.core_graph.induced_subgraph(inner));

    Contraction c = contract(d.core_graph, parts);
    d.contracted_graph = c.graph;
    d.contraction_map = c.vertex_map;

    for (const VertexSet& part : parts) {
        NegativeComponent k;
        k.vertices = part;
        k.edges = induced_edges(g.graph(), part);
        k.contracted_name = c.vertex_map.at(*part.begin());
        for (EdgeId id : cut(g.graph(), part))
            if (join.count(id)) k.cut_join_edges.insert(id);
        if (k.cut_join_edges.size() == 1) {
            EdgeId id = *k.cut_join_edges.begin();
            auto [a, b] = g.graph().endpoints(id);
            k.anchor_inner = part.count(a) ? a : b;
            k.anchor_level0 = part.count(a) ? b : a;
            k.anchor_edge = id;
        }
        d.components.push_back(std::move(k));
    }

    for (const VertexId& v : d.core)
        if (d.level0.count(v) && d.host.is_terminal(v))
            d.contracted_terminals.insert(v);
    for (const NegativeComponent& k : d.components)
        d.contracted_terminals.insert(k.contracted_name);

    return d;
}

SeboChecklist verify_sebo(const SeboDecomposition& d) {
    SeboChecklist list;
    auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        list.items.push_back({name, pass, pass ? "" : detail});
    };

    JoinSolver solver(d.host);
    const EdgeSet& allowed = solver.allowed();

    // (1) no allowed edge crosses the core boundary
    {
        EdgeSet crossing = cut(d.host.graph(), d.core);
        EdgeSet bad;
        for (EdgeId id : crossing)
            if (allowed.count(id)) bad.insert(id);
        add("core-cut-not-allowed", bad.empty(),
            std::to_string(bad.size()) + " allowed edge(s) leave the core");
    }

    // (2) no allowed edge inside the core's level-0 set
    {
        VertexSet core_level0;
        for (const VertexId& v : d.core)
            if (d.level0.count(v)) core_level0.insert(v);
        EdgeSet inside = induced_edges(d.host.graph(), core_level0);
        EdgeSet bad;
        for (EdgeId id : inside)
            if (allowed.count(id)) bad.insert(id);
        add("core-level0-edges-not-allowed", bad.empty(),
            std::to_string(bad.size()) + " allowed edge(s) inside the level-0 set");
    }

    // (3) each negative component's cut carries exactly one join edge
    {
        bool ok = true;
        std::ostringstream detail;
        for (const NegativeComponent& k : d.components) {
            if (k.cut_join_edges.size() != 1) {
                ok = false;
                detail << "component {" << join_ids(k.vertices) << "} meets the join "
                       << k.cut_join_edges.size() << " times; ";
            }
        }
        add("negative-component-unit-join-cut", ok, detail.str());
    }

    // (4) the contracted graft is comb-bipartite with the [K] tooth set and
    // the anchor edges form a minimum join of it
    {
        bool ok = true;
        std::string detail;
        try {
            Graft cg = d.contracted_graft();
            JoinSolver csolver(cg);
            VertexSet tooth;
            for (const NegativeComponent& k : d.components)
                tooth.insert(k.contracted_name);
            if (!comb_bipartite_with_tooth(csolver, tooth)) {
                ok = false;
                detail = "contracted graft is not comb-bipartite with the component teeth";
            } else if (d.contracted_join().size() != d.components.size()) {
                ok = false;
                detail = "anchor edges are incomplete";
            } else if (!is_minimum_join(cg, d.contracted_join())) {
                ok = false;
                detail = "anchor edges are not a minimum join of the contracted graft";
            }
        } catch (const Error& e) {
            ok = false;
            detail = e.what();
        }
        add("contracted-comb-bipartite-minimum-join", ok, detail);
    }

    // (5) the join restricted to a negative component is a minimum join of
    // the component with its inner anchor toggled
    {
        bool ok = true;
        std::ostringstream detail;
        for (const NegativeComponent& k : d.components) {
            if (!k.anchor_inner) {
                ok = false;
                detail << "component {" << join_ids(k.vertices) << "} has no anchor; ";
                continue;
            }
            try {
                if (!is_minimum_join(inner_graft(d, k), inner_join(d, k))) {
                    ok = false;
                    detail << "restriction to {" << join_ids(k.vertices)
                           << "} is not a minimum join; ";
                }
            } catch (const Error& e) {
                ok = false;
                detail << e.what() << "; ";
            }
        }
        add("negative-component-inner-minimum-join", ok, detail.str());
    }

    // (6) inside each negative component every vertex is at distance <= 0
    // from the inner anchor
    {
        bool ok = true;
        std::ostringstream detail;
        for (const NegativeComponent& k : d.components) {
            if (!k.anchor_inner) {
                ok = false;
                detail << "component {" << join_ids(k.vertices) << "} has no anchor; ";
                continue;
            }
            try {
                JoinSolver inner(inner_graft(d, k));
                for (const VertexId& x : k.vertices) {
                    int dv = dist(inner, x, *k.anchor_inner);
                    if (dv > 0) {
                        ok = false;
                        detail << "dist(" << x << ", " << *k.anchor_inner
                               << ") = " << dv << " > 0; ";
                    }
                }
            } catch (const Error& e) {
                ok = false;
                detail << e.what() << "; ";
            }
        }
        add("negative-component-inner-distance", ok, detail.str());
    }

    return list;
}

Path lift_negative_path(const SeboDecomposition& d, const Path& contracted_path,
                        const VertexId& target) {
    const Graph& cg = d.contracted_graph;
    if (!contracted_path.valid_in(cg))
        throw InputError("not a simple path of the contracted graph");
    if (weight_under(d.join, contracted_path.edges) != -1)
        throw InputError("path weight must be exactly -1");

    const VertexId& start = contracted_path.vertices.front();
    const VertexId& end = contracted_path.vertices.back();
    if (!d.level0.count(start))
        throw InputError("path must start at a level-0 vertex of the core");

    const NegativeComponent* final_comp = nullptr;
    for (const NegativeComponent& k : d.components)
        if (k.contracted_name == end) final_comp = &k;
    if (!final_comp)
        throw InputError("path must end at a contracted component vertex");
    if (!final_comp->vertices.count(target))
        throw InputError("target '" + target + "' lies outside the final component");

    Path lifted;
    lifted.vertices.push_back(start);

    const auto& verts = contracted_path.vertices;
    const auto& edges = contracted_path.edges;
    for (size_t i = 1; i < verts.size(); ++i) {
        EdgeId in_edge = edges[i - 1];
        lifted.edges.push_back(in_edge);

        const NegativeComponent* comp = nullptr;
        for (const NegativeComponent& k : d.components)
            if (k.contracted_name == verts[i]) comp = &k;
        if (!comp) {
            // ordinary level-0 vertex
            lifted.vertices.push_back(verts[i]);
            continue;
        }

        // Entry vertex inside the component, as an edge of the host graph.
        auto [a, b] = d.host.graph().endpoints(in_edge);
        VertexId entry = comp->vertices.count(a) ? a : b;

        VertexId exit;
        if (i + 1 < verts.size()) {
            EdgeId out_edge = edges[i];
            auto [c, e] = d.host.graph().endpoints(out_edge);
            exit = comp->vertices.count(c) ? c : e;
            // Exactly one of the two incident path edges lies in the join.
            if (d.join.count(in_edge) == d.join.count(out_edge))
                throw InputError("path does not alternate through component '" +
                                 comp->contracted_name + "'");
        } else {
            if (!d.join.count(in_edge))
                throw InputError("final path edge must lie in the join");
            exit = target;
        }

        // Detour through the component: a minimum-weight simple path under
        // the restricted join, guaranteed weight <= 0.
        Graph sub = d.host.graph().induced_subgraph(comp->vertices);
        EdgeSet sub_join;
        for (EdgeId id : comp->edges)
            if (d.join.count(id)) sub_join.insert(id);
        std::optional<Path> detour =
            oracle::min_weight_simple_path(sub, sub_join, entry, exit);
        if (!detour)
            throw Error("internal: no detour through component '" +
                        comp->contracted_name + "'");
        if (weight_under(sub_join, detour->edges) > 0)
            throw Error("internal: detour has positive weight");
        for (size_t q = 0; q < detour->edges.size(); ++q) {
            lifted.vertices.push_back(detour->vertices[q]);
            lifted.edges.push_back(detour->edges[q]);
        }
        lifted.vertices.push_back(exit);
    }

    if (!lifted.valid_in(d.host.graph()))
        throw Error("internal: lifted path is not simple");
    if (weight_under(d.join, lifted.edges) > -1)
        throw Error("internal: lifted path weight exceeds -1");
    return lifted;
}

bool check_core_component_image(const SeboDecomposition& d) {
    JoinSolver solver(d.host);
    std::vector<FactorComponent> comps = factor_components(solver);
    const FactorComponent* h = nullptr;
    for (const FactorComponent& fc : comps)
        if (fc.vertices.count(d.root)) h = &fc;
    if (!h) return false;

    for (const VertexId& v : h->vertices)
        if (!d.core.count(v)) return false;

    VertexSet image;
    for (const VertexId& v : h->vertices)
        image.insert(d.contraction_map.at(v));

    Graft cg = d.contracted_graft();
    JoinSolver csolver(cg);
    for (const FactorComponent& fc : factor_components(csolver)) {
        if (fc.vertices.count(d.contraction_map.at(d.root))) {
            for (const VertexId& v : image)
                if (!fc.vertices.count(v)) return false;
            return true;
        }
    }
    return false;
}

} // namespace graft
