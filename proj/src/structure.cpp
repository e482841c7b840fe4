#include "graft/structure.hpp"

#include <algorithm>

namespace graft {

namespace {

// 2-coloring per connected component; returns false on an odd cycle.
// color[v] is 0 for the component's smallest vertex.
bool two_color(const Graph& g, std::vector<int>& color) {
    int n = g.vertex_count();
    color.assign(n, -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& [w, id] : g.adjacent(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace

std::vector<FactorComponent> factor_components(JoinSolver& solver) {
    const Graph& g = solver.host().graph();
    const EdgeSet& allowed = solver.allowed();
    Graph skeleton = g.subgraph(g.vertex_set(), allowed);
    std::vector<FactorComponent> out;
    for (const VertexSet& part : connected_components(skeleton)) {
        FactorComponent fc;
        fc.vertices = part;
        fc.edges = induced_edges(g, part);
        out.push_back(std::move(fc));
    }
    return out;
}

std::vector<FactorComponent> factor_components(const Graft& g) {
    JoinSolver solver(g);
    return factor_components(solver);
}

bool same_class(JoinSolver& solver, const VertexId& u, const VertexId& v) {
    const Graph& g = solver.host().graph();
    g.index_of(u);
    g.index_of(v);
    if (u == v) return true;
    for (const FactorComponent& fc : factor_components(solver)) {
        if (fc.vertices.count(u))
            return fc.vertices.count(v) && dist(solver, u, v) == 0;
    }
    return false;
}

bool same_class(const Graft& g, const VertexId& u, const VertexId& v) {
    JoinSolver solver(g);
    return same_class(solver, u, v);
}

KLPartition kl_partition(JoinSolver& solver) {
    KLPartition p;
    p.components = factor_components(solver);

    struct ClassBuild {
        VertexId representative;
        VertexSet members;
        int component;
    };
    std::vector<ClassBuild> builds;
    for (int ci = 0; ci < static_cast<int>(p.components.size()); ++ci) {
        std::vector<int> local; // indices into builds for this component
        for (const VertexId& v : p.components[ci].vertices) {
            bool placed = false;
            for (int bi : local) {
                if (dist(solver, builds[bi].representative, v) == 0) {
                    builds[bi].members.insert(v);
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                builds.push_back({v, {v}, ci});
                local.push_back(static_cast<int>(builds.size()) - 1);
            }
        }
    }
    std::sort(builds.begin(), builds.end(),
              [](const ClassBuild& a, const ClassBuild& b) {
                  return *a.members.begin() < *b.members.begin();
              });
    for (ClassBuild& b : builds) {
        p.classes.push_back(std::move(b.members));
        p.class_component.push_back(b.component);
    }
    return p;
}

KLPartition kl_partition(const Graft& g) {
    JoinSolver solver(g);
    return kl_partition(solver);
}

std::vector<VertexSet> kl_classes_of_component(const KLPartition& p,
                                               const FactorComponent& h) {
    int idx = -1;
    for (int i = 0; i < static_cast<int>(p.components.size()); ++i)
        if (p.components[i] == h) { idx = i; break; }
    if (idx == -1)
        throw InputError("component does not belong to this partition");
    std::vector<VertexSet> out;
    for (size_t c = 0; c < p.classes.size(); ++c)
        if (p.class_component[c] == idx) out.push_back(p.classes[c]);
    return out;
}

std::optional<CombBipartiteView> is_comb_bipartite(JoinSolver& solver) {
    const Graft& host = solver.host();
    const Graph& g = host.graph();
    std::vector<int> color;
    if (!two_color(g, color)) return std::nullopt;

    EdgeSet f = solver.min_join();
    std::vector<int> fdeg(g.vertex_count(), 0);
    for (EdgeId id : f) {
        const Graph::Edge& e = g.edge(id);
        ++fdeg[e.u];
        ++fdeg[e.v];
    }
    auto qualifies = [&](const std::vector<int>& side) {
        for (int v : side)
            if (!host.is_terminal(g.id_of(v)) || fdeg[v] != 1) return false;
        return true;
    };

    CombBipartiteView view;
    view.swap_also_valid = true;
    for (const VertexSet& comp : connected_components(g)) {
        std::vector<int> side0, side1;
        for (const VertexId& v : comp) {
            int i = g.index_of(v);
            (color[i] == 0 ? side0 : side1).push_back(i);
        }
        bool q0 = qualifies(side0);
        bool q1 = qualifies(side1);
        if (!q0 && !q1) return std::nullopt;
        const std::vector<int>& tooth = q1 ? side1 : side0;
        const std::vector<int>& spine = q1 ? side0 : side1;
        for (int v : tooth) view.tooth.insert(g.id_of(v));
        for (int v : spine) view.spine.insert(g.id_of(v));
        view.swap_also_valid = view.swap_also_valid && q0 && q1;
    }
    return view;
}

std::optional<CombBipartiteView> is_comb_bipartite(const Graft& g) {
    JoinSolver solver(g);
    return is_comb_bipartite(solver);
}

bool comb_bipartite_with_tooth(JoinSolver& solver, const VertexSet& tooth) {
    const Graft& host = solver.host();
    const Graph& g = host.graph();
    for (const VertexId& v : tooth) {
        g.index_of(v);
        if (!host.is_terminal(v)) return false;
    }
    for (const Graph::Edge& e : g.edges()) {
        int ends_in_tooth = (tooth.count(g.id_of(e.u)) ? 1 : 0) +
                            (tooth.count(g.id_of(e.v)) ? 1 : 0);
        if (ends_in_tooth != 1) return false;
    }
    return solver.nu() == static_cast<int>(tooth.size());
}

std::vector<ComponentRefinement> refinement_report(JoinSolver& solver) {
    KLPartition host_partition = kl_partition(solver);
    std::vector<ComponentRefinement> out;
    for (size_t ci = 0; ci < host_partition.components.size(); ++ci) {
        ComponentRefinement r;
        r.component = host_partition.components[ci];
        for (size_t c = 0; c < host_partition.classes.size(); ++c)
            if (host_partition.class_component[c] == static_cast<int>(ci))
                r.host_classes.push_back(host_partition.classes[c]);

        Graft standalone = induced_subgraft(solver.host(), r.component.vertices);
        KLPartition sub = kl_partition(standalone);
        r.standalone_classes = sub.classes;

        r.refines = true;
        for (const VertexSet& hc : r.host_classes) {
            bool inside_one = false;
            for (const VertexSet& sc : r.standalone_classes) {
                if (std::includes(sc.begin(), sc.end(), hc.begin(), hc.end())) {
                    inside_one = true;
                    break;
                }
            }
            if (!inside_one) {
                r.refines = false;
                break;
            }
        }
        r.proper = r.refines && r.host_classes.size() != r.standalone_classes.size();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<ComponentRefinement> refinement_report(const Graft& g) {
    JoinSolver solver(g);
    return refinement_report(solver);
}

} // namespace graft
