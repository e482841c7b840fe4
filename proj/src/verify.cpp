#include "graft/verify.hpp"

#include <sstream>

#include "graft/distance.hpp"
#include "graft/join.hpp"
#include "graft/oracle.hpp"
#include "graft/sebo.hpp"
#include "graft/structure.hpp"

namespace graft {

namespace {

using Results = std::vector<CheckResult>;

void pass(Results& r, const std::string& name) {
    r.push_back({name, CheckStatus::pass, ""});
}
void fail(Results& r, const std::string& name, const std::string& detail) {
    r.push_back({name, CheckStatus::fail, detail});
}
void skip(Results& r, const std::string& name, const std::string& why) {
    r.push_back({name, CheckStatus::skipped, why});
}
void outcome(Results& r, const std::string& name, bool ok, const std::string& detail) {
    if (ok)
        pass(r, name);
    else
        fail(r, name, detail);
}

std::string show_pair(const VertexId& a, const VertexId& b) {
    return "(" + a + ", " + b + ")";
}

} // namespace

bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (r.status == CheckStatus::fail) return false;
    return true;
}

std::vector<CheckResult> verify_instance(const Graft& g, const VerifyOptions& opt) {
    Results results;
    const Graph& graph = g.graph();
    const int n = graph.vertex_count();
    const int m = graph.edge_count();
    const bool enumerable = m <= opt.max_join_edges;
    const bool path_scale = n <= opt.max_path_vertices;

    JoinSolver solver(g);
    KLPartition partition = kl_partition(solver);
    DistanceTable table = distance_table(solver);

    std::vector<EdgeSet> min_joins;
    if (enumerable) min_joins = oracle::enumerate_minimum_joins(g, opt.max_join_edges);

    // A graft admits a join, and the solver's minimum matches the
    // exhaustive minimum, allowed edges included.
    if (!enumerable) {
        skip(results, "join-existence", "enumeration bound exceeded");
        skip(results, "minimum-join-agreement", "enumeration bound exceeded");
        skip(results, "allowed-union-minimum-joins", "enumeration bound exceeded");
    } else {
        outcome(results, "join-existence", !min_joins.empty(),
                "graft admits no join");
        bool agree = !min_joins.empty() &&
                     static_cast<int>(min_joins.front().size()) == solver.nu() &&
                     is_join(g, solver.min_join()) &&
                     solver.min_join().size() == min_joins.front().size();
        outcome(results, "minimum-join-agreement", agree,
                "solver minimum join disagrees with exhaustive minimum");
        EdgeSet unioned;
        for (const EdgeSet& f : min_joins) unioned.insert(f.begin(), f.end());
        outcome(results, "allowed-union-minimum-joins", unioned == solver.allowed(),
                "allowed edges differ from the union of minimum joins");
    }

    // Distances computed from ν differences match the minimum simple-path
    // weight under every minimum join.
    if (!enumerable || !path_scale) {
        skip(results, "distance-join-independence", "bound exceeded");
    } else {
        bool ok = true;
        std::ostringstream detail;
        const auto& vs = graph.vertices();
        for (size_t i = 0; i < vs.size() && ok; ++i) {
            for (size_t j = i + 1; j < vs.size() && ok; ++j) {
                if (!solver.same_component(vs[i], vs[j])) continue;
                int dv = dist(solver, vs[i], vs[j]);
                for (const EdgeSet& f : min_joins) {
                    auto p = oracle::min_weight_simple_path(graph, f, vs[i], vs[j]);
                    int w = weight_under(f, p->edges);
                    if (w != dv) {
                        ok = false;
                        detail << show_pair(vs[i], vs[j]) << ": path weight " << w
                               << " vs distance " << dv;
                        break;
                    }
                }
            }
        }
        outcome(results, "distance-join-independence", ok, detail.str());
    }

    // An edge set is a minimum join exactly when every circuit has
    // non-negative weight under it.
    if (!enumerable || !path_scale) {
        skip(results, "minimum-join-circuit-criterion", "bound exceeded");
    } else {
        bool ok = true;
        std::string detail;
        std::vector<EdgeSet> circuits = oracle::simple_circuits(graph);
        int best = min_joins.empty() ? -1 : static_cast<int>(min_joins.front().size());
        for (const EdgeSet& f : oracle::enumerate_joins(g, opt.max_join_edges)) {
            bool minimum = static_cast<int>(f.size()) == best;
            bool conservative = true;
            for (const EdgeSet& c : circuits) {
                int w = 0;
                for (EdgeId id : c) w += f.count(id) ? -1 : 1;
                if (w < 0) {
                    conservative = false;
                    break;
                }
            }
            if (minimum != conservative) {
                ok = false;
                detail = minimum ? "minimum join admits a negative circuit"
                                 : "non-minimum join with only non-negative circuits";
                break;
            }
        }
        outcome(results, "minimum-join-circuit-criterion", ok, detail);
    }

    // Comb recognition: a tooth side certified by one minimum join is
    // saturated exactly once by every minimum join.
    std::optional<CombBipartiteView> comb = is_comb_bipartite(solver);
    if (!comb) {
        skip(results, "comb-tooth-saturation", "not comb-bipartite");
        skip(results, "comb-path-tooth-parity", "not comb-bipartite");
        skip(results, "comb-spine-tooth-distance", "not comb-bipartite");
    } else {
        if (!enumerable) {
            skip(results, "comb-tooth-saturation", "enumeration bound exceeded");
        } else {
            bool ok = static_cast<int>(comb->tooth.size()) == solver.nu();
            for (const EdgeSet& f : min_joins) {
                for (const VertexId& t : comb->tooth) {
                    int deg = 0;
                    for (EdgeId id : cut(graph, {t}))
                        if (f.count(id)) ++deg;
                    if (deg != 1) ok = false;
                }
            }
            outcome(results, "comb-tooth-saturation", ok,
                    "a minimum join does not meet every tooth vertex exactly once");
        }

        // Paths of weight -1 from spine to tooth meet the join exactly once
        // at every tooth vertex they pass.
        if (!enumerable || !path_scale) {
            skip(results, "comb-path-tooth-parity", "bound exceeded");
        } else {
            bool ok = true;
            for (const EdgeSet& f : min_joins) {
                for (const VertexId& s : comb->spine) {
                    for (const VertexId& t : comb->tooth) {
                        if (!solver.same_component(s, t)) continue;
                        for (const Path& p : oracle::simple_paths(graph, s, t)) {
                            if (weight_under(f, p.edges) != -1) continue;
                            for (const VertexId& v : p.vertices) {
                                if (!comb->tooth.count(v)) continue;
                                int deg = 0;
                                for (size_t q = 0; q < p.edges.size(); ++q) {
                                    if (p.vertices[q] == v || p.vertices[q + 1] == v)
                                        deg += f.count(p.edges[q]) ? 1 : 0;
                                }
                                if (deg != 1) ok = false;
                            }
                        }
                    }
                }
            }
            outcome(results, "comb-path-tooth-parity", ok,
                    "a weight -1 spine-tooth path violates tooth join parity");
        }

        // In a factor-connected comb-bipartite graft every spine-tooth
        // distance is exactly -1.
        if (partition.components.size() != 1) {
            skip(results, "comb-spine-tooth-distance", "not factor-connected");
        } else {
            bool ok = true;
            std::ostringstream detail;
            for (const VertexId& s : comb->spine)
                for (const VertexId& t : comb->tooth) {
                    int dv = dist(solver, s, t);
                    if (dv != -1) {
                        ok = false;
                        detail << show_pair(s, t) << " has distance " << dv << "; ";
                    }
                }
            outcome(results, "comb-spine-tooth-distance", ok, detail.str());
        }
    }

    // Factor-connected vertices lie at distance <= 0.
    {
        bool ok = true;
        std::ostringstream detail;
        for (const FactorComponent& fc : partition.components)
            for (const VertexId& u : fc.vertices)
                for (const VertexId& v : fc.vertices)
                    if (u < v && table.at(u, v) > 0) {
                        ok = false;
                        detail << show_pair(u, v) << " has distance "
                               << table.at(u, v) << "; ";
                    }
        outcome(results, "factor-connected-distance", ok, detail.str());
    }

    // The class relation is transitive and matches the raw oracle relation.
    {
        bool ok = true;
        std::string detail;
        const auto& vs = graph.vertices();
        std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                rel[i][j] = same_class(solver, vs[i], vs[j]);
        for (int u = 0; u < n && ok; ++u)
            for (int v = 0; v < n && ok; ++v)
                for (int w = 0; w < n && ok; ++w)
                    if (rel[u][v] && rel[v][w] && !rel[u][w]) {
                        ok = false;
                        detail = "transitivity fails at " + vs[u] + ", " + vs[v] +
                                 ", " + vs[w];
                    }
        if (ok && enumerable) {
            auto brute = oracle::brute_kl_relation(g, opt.max_join_edges);
            if (brute != rel) {
                ok = false;
                detail = "solver relation differs from the raw definition";
            }
        }
        outcome(results, "class-relation-transitivity", ok, detail);
    }

    // Decomposition claims, for every (minimum join, root) pair in bounds.
    if (!enumerable) {
        skip(results, "distance-decomposition", "enumeration bound exceeded");
        skip(results, "core-image-connectivity", "enumeration bound exceeded");
        skip(results, "negative-path-lift", "enumeration bound exceeded");
    } else {
        long long runs = static_cast<long long>(min_joins.size()) * n;
        if (runs > opt.max_decomposition_runs) {
            skip(results, "distance-decomposition", "too many (join, root) pairs");
            skip(results, "core-image-connectivity", "too many (join, root) pairs");
            skip(results, "negative-path-lift", "too many (join, root) pairs");
        } else {
            bool ok = true, image_ok = true, lift_ok = true;
            std::string detail, image_detail, lift_detail;
            for (const EdgeSet& f : min_joins) {
                for (const VertexId& r : graph.vertices()) {
                    SeboDecomposition d = sebo_decomposition(g, f, r);
                    SeboChecklist checks = verify_sebo(d);
                    if (!checks.all_pass()) {
                        ok = false;
                        for (const auto& item : checks.items)
                            if (!item.pass)
                                detail += item.name + " at root " + r + ": " +
                                          item.detail + "; ";
                    }
                    if (!check_core_component_image(d)) {
                        image_ok = false;
                        image_detail += "root " + r + "; ";
                    }
                    if (path_scale) {
                        // enumerate qualifying contracted paths and lift them
                        Graft cg = d.contracted_graft();
                        for (const NegativeComponent& k : d.components) {
                            for (const VertexId& u : d.core) {
                                if (!d.level0.count(u)) continue;
                                for (const Path& p : oracle::simple_paths(
                                         cg.graph(), u, k.contracted_name)) {
                                    if (weight_under(f, p.edges) != -1) continue;
                                    for (const VertexId& v : k.vertices) {
                                        try {
                                            Path lifted = lift_negative_path(d, p, v);
                                            if (weight_under(f, lifted.edges) > -1 ||
                                                !lifted.valid_in(graph))
                                                lift_ok = false;
                                        } catch (const Error& e) {
                                            lift_ok = false;
                                            lift_detail = e.what();
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
            outcome(results, "distance-decomposition", ok, detail);
            outcome(results, "core-image-connectivity", image_ok, image_detail);
            if (path_scale)
                outcome(results, "negative-path-lift", lift_ok, lift_detail);
            else
                skip(results, "negative-path-lift", "bound exceeded");
        }
    }

    // For factorizable graphs with every vertex terminal the partition
    // matches the perfect-matching partition.
    if (g.terminals() == graph.vertex_set() && n > 0 && n <= 22 &&
        oracle::is_factorizable(graph)) {
        bool ok = partition.classes == oracle::matching_kl(graph);
        outcome(results, "matching-partition-reduction", ok,
                "partition differs from the perfect-matching partition");
    } else {
        skip(results, "matching-partition-reduction",
             "terminals are not the whole vertex set of a factorizable graph");
    }

    // Host classes restricted to a factor-component refine the component's
    // standalone partition.
    {
        bool ok = true;
        int proper = 0;
        for (const ComponentRefinement& r : refinement_report(solver)) {
            if (!r.refines) ok = false;
            if (r.proper) ++proper;
        }
        outcome(results, "partition-refinement", ok,
                "a host class crosses a standalone class");
        if (ok && proper > 0)
            results.back().detail =
                std::to_string(proper) + " component(s) properly refined";
    }

    return results;
}

} // namespace graft
