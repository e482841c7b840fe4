#include "graft/join.hpp"

#include <algorithm>
#include <queue>

#include "graft/matching.hpp"

namespace graft {

bool is_join(const Graft& g, const EdgeSet& f) {
    const Graph& graph = g.graph();
    std::vector<int> degree(graph.vertex_count(), 0);
    for (EdgeId id : f) {
        const Graph::Edge& e = graph.edge(id); // throws on foreign ids
        ++degree[e.u];
        ++degree[e.v];
    }
    for (int v = 0; v < graph.vertex_count(); ++v) {
        bool odd = degree[v] % 2 == 1;
        if (odd != g.is_terminal(graph.id_of(v))) return false;
    }
    return true;
}

JoinSolver::JoinSolver(Graft host) : host_(std::move(host)) {
    const Graph& g = host_.graph();
    n_ = g.vertex_count();

    comp_.assign(n_, -1);
    int ncomp = 0;
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (comp_[s] != -1) continue;
        comp_[s] = ncomp;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& [w, id] : g.adjacent(v))
                if (comp_[w] == -1) {
                    comp_[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }
    size_t words = (n_ + 63) / 64;
    comp_masks_.assign(ncomp, Mask(words, 0));
    for (int v = 0; v < n_; ++v)
        comp_masks_[comp_[v]][v / 64] |= std::uint64_t(1) << (v % 64);

    // All-pairs unit shortest paths by BFS from every vertex.
    sp_.assign(n_, std::vector<int>(n_, -1));
    for (int s = 0; s < n_; ++s) {
        std::vector<int>& d = sp_[s];
        d[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const auto& [w, id] : g.adjacent(v))
                if (d[w] == -1) {
                    d[w] = d[v] + 1;
                    q.push(w);
                }
        }
    }
    edge_deleted_.resize(g.edge_count());
}

JoinSolver::Mask JoinSolver::mask_of(const VertexSet& terminals) const {
    Mask m((n_ + 63) / 64, 0);
    for (const VertexId& t : terminals) {
        int i = host_.graph().index_of(t);
        m[i / 64] |= std::uint64_t(1) << (i % 64);
    }
    return m;
}

bool JoinSolver::parity_ok(const Mask& m) const {
    for (const Mask& cm : comp_masks_) {
        int count = 0;
        for (size_t w = 0; w < m.size(); ++w)
            count += __builtin_popcountll(m[w] & cm[w]);
        if (count % 2 != 0) return false;
    }
    return true;
}

int JoinSolver::nu_mask(const Mask& m, const VertexSet& terminals) {
    auto it = nu_cache_.find(m);
    if (it != nu_cache_.end()) return it->second;

    std::vector<std::vector<int>> per_comp(comp_masks_.size());
    for (const VertexId& t : terminals) {
        int i = host_.graph().index_of(t);
        per_comp[comp_[i]].push_back(i);
    }
    int total = 0;
    for (std::vector<int>& ts : per_comp) {
        if (ts.empty()) continue;
        std::sort(ts.begin(), ts.end());
        int k = static_cast<int>(ts.size());
        // Minimum-weight perfect matching on the component's terminals.
        // A small secondary term makes the chosen pairing canonical among
        // equal-weight pairings.
        long long scale = static_cast<long long>(k) * k * k + 1;
        std::vector<WeightedEdge> aux;
        aux.reserve(static_cast<size_t>(k) * (k - 1) / 2);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                aux.push_back({i, j,
                               static_cast<long long>(sp_[ts[i]][ts[j]]) * scale +
                                   static_cast<long long>(i) * k + j});
        std::vector<int> mate = min_weight_perfect_matching(k, aux);
        for (int i = 0; i < k; ++i)
            if (mate[i] > i) total += sp_[ts[i]][ts[mate[i]]];
    }
    nu_cache_.emplace(m, total);
    return total;
}

int JoinSolver::nu_of(const VertexSet& terminals) {
    Mask m = mask_of(terminals);
    if (!parity_ok(m))
        throw InputError("terminal set has odd parity in some component");
    return nu_mask(m, terminals);
}

std::optional<int> JoinSolver::nu_if_graft(const VertexSet& terminals) {
    Mask m = mask_of(terminals);
    if (!parity_ok(m)) return std::nullopt;
    return nu_mask(m, terminals);
}

EdgeSet JoinSolver::min_join_of(const VertexSet& terminals) {
    Mask m = mask_of(terminals);
    if (!parity_ok(m))
        throw InputError("terminal set has odd parity in some component");
    const Graph& g = host_.graph();

    std::vector<std::vector<int>> per_comp(comp_masks_.size());
    for (const VertexId& t : terminals)
        per_comp[comp_[g.index_of(t)]].push_back(g.index_of(t));

    EdgeSet join;
    for (std::vector<int>& ts : per_comp) {
        if (ts.empty()) continue;
        std::sort(ts.begin(), ts.end());
        int k = static_cast<int>(ts.size());
        long long scale = static_cast<long long>(k) * k * k + 1;
        std::vector<WeightedEdge> aux;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                aux.push_back({i, j,
                               static_cast<long long>(sp_[ts[i]][ts[j]]) * scale +
                                   static_cast<long long>(i) * k + j});
        std::vector<int> mate = min_weight_perfect_matching(k, aux);
        for (int i = 0; i < k; ++i) {
            if (mate[i] <= i) continue;
            // Walk a shortest path from the smaller endpoint, preferring
            // the smallest edge id at every step; this picks the
            // lexicographically least edge-id sequence among shortest paths.
            int s = ts[i];
            int t = ts[mate[i]];
            const std::vector<int>& dist_to_t = sp_[t];
            int cur = s;
            while (cur != t) {
                int best_edge = -1;
                int best_next = -1;
                for (const auto& [w, id] : g.adjacent(cur)) {
                    if (dist_to_t[w] != dist_to_t[cur] - 1) continue;
                    if (best_edge == -1 || id < best_edge) {
                        best_edge = id;
                        best_next = w;
                    }
                }
                if (best_edge == -1) throw Error("internal: broken shortest path walk");
                // Symmetric difference: paths may reuse an edge.
                if (!join.insert(best_edge).second) join.erase(best_edge);
                cur = best_next;
            }
        }
    }

    Graft check_host(g, terminals);
    if (!is_join(check_host, join))
        throw Error("internal: constructed edge set is not a join");
    if (static_cast<int>(join.size()) != nu_mask(m, terminals))
        throw Error("internal: constructed join is not minimum");
    return join;
}

JoinCertificate JoinSolver::certify() {
    JoinCertificate c;
    c.edges = min_join();
    c.size = static_cast<int>(c.edges.size());
    c.minimum = true;
    return c;
}

JoinSolver& JoinSolver::deleted_edge_solver(int edge_pos) {
    if (!edge_deleted_[edge_pos]) {
        const Graph::Edge& e = host_.graph().edges()[edge_pos];
        Graph reduced = host_.graph().without_edges({e.id});
        edge_deleted_[edge_pos] =
            std::make_unique<JoinSolver>(Graft(std::move(reduced), VertexSet{}));
    }
    return *edge_deleted_[edge_pos];
}

EdgeSet JoinSolver::allowed_of(const VertexSet& terminals) {
    Mask m = mask_of(terminals);
    if (!parity_ok(m))
        throw InputError("terminal set has odd parity in some component");
    auto it = allowed_cache_.find(m);
    if (it != allowed_cache_.end()) return it->second;

    const Graph& g = host_.graph();
    int base = nu_mask(m, terminals);
    EdgeSet result;
    for (int pos = 0; pos < g.edge_count(); ++pos) {
        const Graph::Edge& e = g.edges()[pos];
        VertexSet toggled = symmetric_difference(
            terminals, VertexSet{g.id_of(e.u), g.id_of(e.v)});
        // Deleting the edge may disconnect the component; when the toggled
        // terminal set has no join in the reduced graph, ν is +infinity
        // and the edge cannot be allowed.
        std::optional<int> reduced = deleted_edge_solver(pos).nu_if_graft(toggled);
        if (reduced && *reduced == base - 1) result.insert(e.id);
    }
    allowed_cache_.emplace(std::move(m), result);
    return result;
}

const EdgeSet& JoinSolver::allowed() {
    Mask m = mask_of(host_.terminals());
    auto it = allowed_cache_.find(m);
    if (it == allowed_cache_.end()) {
        allowed_of(host_.terminals());
        it = allowed_cache_.find(m);
    }
    return it->second;
}

bool JoinSolver::same_component(const VertexId& x, const VertexId& y) const {
    return comp_[host_.graph().index_of(x)] == comp_[host_.graph().index_of(y)];
}

int nu(const Graft& g) { return JoinSolver(g).nu(); }

JoinCertificate min_join(const Graft& g) { return JoinSolver(g).certify(); }

bool is_minimum_join(const Graft& g, const EdgeSet& f) {
    if (!is_join(g, f)) return false;
    return static_cast<int>(f.size()) == JoinSolver(g).nu();
}

EdgeSet allowed_edges(const Graft& g) {
    JoinSolver solver(g);
    return solver.allowed();
}

} // namespace graft
