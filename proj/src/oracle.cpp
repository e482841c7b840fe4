#include "graft/oracle.hpp"

#include <algorithm>
#include <climits>
#include <functional>

#include "graft/distance.hpp"

namespace graft::oracle {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw BoundError(msg);
}

// Dense view of a graph: edge positions 0..m-1 in edge-id order, endpoint
// parity masks over vertex positions.
struct Dense {
    int n = 0;
    int m = 0;
    std::vector<std::pair<int, int>> ends;       // per edge position
    std::vector<std::uint32_t> parity;           // bit(u) | bit(v)
    std::vector<std::vector<std::pair<int, int>>> adj; // (neighbor, edge pos)
    std::vector<EdgeId> ids;                     // position -> edge id

    explicit Dense(const Graph& g) {
        n = g.vertex_count();
        m = g.edge_count();
        require(n <= 31, "graph too large for exhaustive oracle (n <= 31)");
        adj.assign(n, {});
        for (int pos = 0; pos < m; ++pos) {
            const Graph::Edge& e = g.edges()[pos];
            ends.push_back({e.u, e.v});
            parity.push_back((std::uint32_t(1) << e.u) | (std::uint32_t(1) << e.v));
            adj[e.u].push_back({e.v, pos});
            adj[e.v].push_back({e.u, pos});
            ids.push_back(e.id);
        }
    }

    EdgeSet edges_from_mask(std::uint32_t mask) const {
        EdgeSet out;
        for (int pos = 0; pos < m; ++pos)
            if (mask & (std::uint32_t(1) << pos)) out.insert(ids[pos]);
        return out;
    }
};

std::uint32_t terminal_mask(const Graph& g, const VertexSet& terminals) {
    std::uint32_t mask = 0;
    for (const VertexId& t : terminals)
        mask |= std::uint32_t(1) << g.index_of(t);
    return mask;
}

// Enumerate all join masks in ascending order.
std::vector<std::uint32_t> join_masks(const Dense& d, std::uint32_t tmask,
                                      int max_edges, bool minimum_only) {
    require(d.m <= max_edges,
            "join enumeration refused: " + std::to_string(d.m) + " edges exceeds bound " +
                std::to_string(max_edges));
    // Gray-code sweep; odd-degree set changes by one edge parity per step.
    std::uint32_t total = std::uint32_t(1) << d.m;
    std::uint32_t subset = 0;
    std::uint32_t odd = 0;
    int size = 0;
    int best = INT_MAX;
    std::vector<std::uint32_t> found;
    for (std::uint32_t i = 0;; ++i) {
        if (odd == tmask) {
            if (!minimum_only) {
                found.push_back(subset);
            } else if (size < best) {
                best = size;
                found.assign(1, subset);
            } else if (size == best) {
                found.push_back(subset);
            }
        }
        if (i + 1 >= total) break;
        int b = __builtin_ctz(i + 1);
        std::uint32_t bit = std::uint32_t(1) << b;
        subset ^= bit;
        odd ^= d.parity[b];
        size += (subset & bit) ? 1 : -1;
    }
    std::sort(found.begin(), found.end());
    return found;
}

} // namespace

std::vector<EdgeSet> enumerate_joins(const Graft& g, int max_edges) {
    Dense d(g.graph());
    std::vector<EdgeSet> out;
    for (std::uint32_t mask :
         join_masks(d, terminal_mask(g.graph(), g.terminals()), max_edges, false))
        out.push_back(d.edges_from_mask(mask));
    return out;
}

std::vector<EdgeSet> enumerate_minimum_joins(const Graft& g, int max_edges) {
    Dense d(g.graph());
    std::vector<EdgeSet> out;
    for (std::uint32_t mask :
         join_masks(d, terminal_mask(g.graph(), g.terminals()), max_edges, true))
        out.push_back(d.edges_from_mask(mask));
    return out;
}

int brute_nu(const Graft& g, int max_edges) {
    Dense d(g.graph());
    auto mins = join_masks(d, terminal_mask(g.graph(), g.terminals()), max_edges, true);
    if (mins.empty()) throw Error("internal: valid graft without joins");
    return __builtin_popcount(mins.front());
}

EdgeSet brute_allowed(const Graft& g, int max_edges) {
    Dense d(g.graph());
    std::uint32_t unioned = 0;
    for (std::uint32_t mask :
         join_masks(d, terminal_mask(g.graph(), g.terminals()), max_edges, true))
        unioned |= mask;
    return d.edges_from_mask(unioned);
}

int brute_dist(const Graft& g, const VertexId& x, const VertexId& y, int max_edges) {
    const Graph& graph = g.graph();
    graph.index_of(x);
    graph.index_of(y);
    if (x == y) return 0;
    std::optional<int> value;
    for (const EdgeSet& f : enumerate_minimum_joins(g, max_edges)) {
        std::optional<Path> p = min_weight_simple_path(graph, f, x, y);
        if (!p)
            throw DomainError("distance undefined across components: '" + x +
                              "' and '" + y + "'");
        int w = weight_under(f, p->edges);
        if (value && *value != w)
            throw Error("internal: distance depends on the minimum join");
        value = w;
    }
    return *value;
}

std::vector<std::vector<bool>> brute_kl_relation(const Graft& g, int max_edges) {
    const Graph& graph = g.graph();
    int n = graph.vertex_count();
    EdgeSet allowed = brute_allowed(g, max_edges);
    Graph skeleton = graph.subgraph(graph.vertex_set(), allowed);
    std::vector<int> comp(n, -1);
    {
        int c = 0;
        for (const VertexSet& part : connected_components(skeleton)) {
            for (const VertexId& v : part) comp[graph.index_of(v)] = c;
            ++c;
        }
    }
    JoinTable table(graph, std::max(max_edges, 20));
    int base = *table.nu_of(g.terminals());
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) {
        rel[i][i] = true;
        for (int j = i + 1; j < n; ++j) {
            if (comp[i] != comp[j]) continue;
            VertexSet toggled = symmetric_difference(
                g.terminals(), {graph.id_of(i), graph.id_of(j)});
            std::optional<int> v = table.nu_of(toggled);
            bool related = v && *v == base;
            rel[i][j] = rel[j][i] = related;
        }
    }
    return rel;
}

std::vector<VertexSet> brute_kl(const Graft& g, int max_edges) {
    const Graph& graph = g.graph();
    int n = graph.vertex_count();
    auto rel = brute_kl_relation(g, max_edges);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < n; ++w)
                if (rel[u][v] && rel[v][w] && !rel[u][w])
                    throw Error("internal: raw class relation is not transitive");
    std::vector<bool> done(n, false);
    std::vector<VertexSet> classes;
    for (int i = 0; i < n; ++i) {
        if (done[i]) continue;
        VertexSet cls;
        for (int j = 0; j < n; ++j)
            if (rel[i][j]) {
                cls.insert(graph.id_of(j));
                done[j] = true;
            }
        classes.push_back(std::move(cls));
    }
    return classes; // first members appear in vertex order: sorted already
}

namespace {

struct MatchingOracle {
    const Graph& g;
    int n;
    std::vector<std::uint32_t> adj_mask;
    std::vector<signed char> memo;

    explicit MatchingOracle(const Graph& graph) : g(graph) {
        n = g.vertex_count();
        require(n <= 22, "matching oracle refused: graph too large");
        adj_mask.assign(n, 0);
        for (const Graph::Edge& e : g.edges()) {
            adj_mask[e.u] |= std::uint32_t(1) << e.v;
            adj_mask[e.v] |= std::uint32_t(1) << e.u;
        }
        memo.assign(std::size_t(1) << n, -1);
    }

    bool factorizable(std::uint32_t mask) {
        if (mask == 0) return true;
        signed char& slot = memo[mask];
        if (slot != -1) return slot == 1;
        int v = __builtin_ctz(mask);
        std::uint32_t partners = adj_mask[v] & mask;
        bool ok = false;
        while (partners && !ok) {
            int w = __builtin_ctz(partners);
            partners &= partners - 1;
            ok = factorizable(mask & ~(std::uint32_t(1) << v) &
                              ~(std::uint32_t(1) << w));
        }
        slot = ok ? 1 : 0;
        return ok;
    }
};

} // namespace

bool is_factorizable(const Graph& g) {
    if (g.vertex_count() % 2 != 0) return false;
    MatchingOracle mo(g);
    return mo.factorizable((std::uint32_t(1) << g.vertex_count()) - 1);
}

std::vector<VertexSet> matching_kl(const Graph& g) {
    MatchingOracle mo(g);
    int n = g.vertex_count();
    std::uint32_t full = (n == 0) ? 0 : (std::uint32_t(1) << n) - 1;
    if (n % 2 != 0 || !mo.factorizable(full))
        throw InputError("matching partition requires a factorizable graph");

    auto without = [&](int u, int v) {
        return full & ~(std::uint32_t(1) << u) & ~(std::uint32_t(1) << v);
    };
    EdgeSet allowed;
    for (const Graph::Edge& e : g.edges())
        if (mo.factorizable(without(e.u, e.v))) allowed.insert(e.id);
    Graph skeleton = g.subgraph(g.vertex_set(), allowed);
    std::vector<int> comp(n, -1);
    int c = 0;
    for (const VertexSet& part : connected_components(skeleton)) {
        for (const VertexId& v : part) comp[g.index_of(v)] = c;
        ++c;
    }

    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (int u = 0; u < n; ++u) {
        rel[u][u] = true;
        for (int v = u + 1; v < n; ++v) {
            if (comp[u] != comp[v]) continue;
            bool related = !mo.factorizable(without(u, v));
            rel[u][v] = rel[v][u] = related;
        }
    }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < n; ++w)
                if (rel[u][v] && rel[v][w] && !rel[u][w])
                    throw Error("internal: matching relation is not transitive");
    std::vector<bool> done(n, false);
    std::vector<VertexSet> classes;
    for (int i = 0; i < n; ++i) {
        if (done[i]) continue;
        VertexSet cls;
        for (int j = 0; j < n; ++j)
            if (rel[i][j]) {
                cls.insert(g.id_of(j));
                done[j] = true;
            }
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::vector<Path> simple_paths(const Graph& g, const VertexId& x, const VertexId& y) {
    require(g.vertex_count() <= 16, "path enumeration refused: graph too large");
    int xi = g.index_of(x);
    int yi = g.index_of(y);
    if (xi == yi) throw InputError("path enumeration requires distinct endpoints");

    std::vector<Path> out;
    std::vector<int> vstack{xi};
    std::vector<EdgeId> estack;
    std::vector<bool> visited(g.vertex_count(), false);
    visited[xi] = true;
    std::function<void(int)> dfs = [&](int v) {
        if (v == yi) {
            Path p;
            for (int idx : vstack) p.vertices.push_back(g.id_of(idx));
            p.edges = estack;
            out.push_back(std::move(p));
            return;
        }
        for (const auto& [w, id] : g.adjacent(v)) {
            if (visited[w]) continue;
            visited[w] = true;
            vstack.push_back(w);
            estack.push_back(id);
            dfs(w);
            estack.pop_back();
            vstack.pop_back();
            visited[w] = false;
        }
    };
    dfs(xi);
    return out;
}

std::optional<Path> min_weight_simple_path(const Graph& g, const EdgeSet& join,
                                           const VertexId& x, const VertexId& y) {
    require(g.vertex_count() <= 16, "path search refused: graph too large");
    int xi = g.index_of(x);
    int yi = g.index_of(y);
    if (xi == yi) return Path{{x}, {}};

    std::optional<Path> best;
    int best_weight = INT_MAX;
    std::vector<int> vstack{xi};
    std::vector<EdgeId> estack;
    std::vector<bool> visited(g.vertex_count(), false);
    visited[xi] = true;
    std::function<void(int, int)> dfs = [&](int v, int weight) {
        if (v == yi) {
            if (weight < best_weight) {
                best_weight = weight;
                Path p;
                for (int idx : vstack) p.vertices.push_back(g.id_of(idx));
                p.edges = estack;
                best = std::move(p);
            }
            return;
        }
        for (const auto& [w, id] : g.adjacent(v)) {
            if (visited[w]) continue;
            visited[w] = true;
            vstack.push_back(w);
            estack.push_back(id);
            dfs(w, weight + (join.count(id) ? -1 : 1));
            estack.pop_back();
            vstack.pop_back();
            visited[w] = false;
        }
    };
    dfs(xi, 0);
    return best;
}

std::vector<EdgeSet> simple_circuits(const Graph& g) {
    require(g.vertex_count() <= 16, "circuit enumeration refused: graph too large");
    if (g.contracted())
        throw InputError("circuit enumeration requires a simple (non-contracted) graph");
    int n = g.vertex_count();
    std::vector<EdgeSet> out;
    std::vector<int> vstack;
    std::vector<EdgeId> estack;
    std::vector<bool> visited(n, false);

    // Cycles are rooted at their smallest vertex s and traversed toward the
    // smaller of the two possible directions to avoid duplicates.
    for (int s = 0; s < n; ++s) {
        std::function<void(int)> dfs = [&](int v) {
            for (const auto& [w, id] : g.adjacent(v)) {
                if (w == s && vstack.size() >= 3 && vstack[1] < vstack.back()) {
                    EdgeSet cycle(estack.begin(), estack.end());
                    cycle.insert(id);
                    out.push_back(std::move(cycle));
                    continue;
                }
                if (w <= s || visited[w]) continue;
                visited[w] = true;
                vstack.push_back(w);
                estack.push_back(id);
                dfs(w);
                estack.pop_back();
                vstack.pop_back();
                visited[w] = false;
            }
        };
        visited[s] = true;
        vstack.push_back(s);
        dfs(s);
        vstack.pop_back();
        visited[s] = false;
    }
    return out;
}

JoinTable::JoinTable(const Graph& g, int max_edges) : g_(&g) {
    n_ = g.vertex_count();
    m_ = g.edge_count();
    require(n_ <= 25, "join table refused: too many vertices");
    require(m_ <= max_edges && m_ <= 25,
            "join table refused: " + std::to_string(m_) + " edges exceeds bound");
    for (const Graph::Edge& e : g.edges())
        edge_parity_.push_back((std::uint32_t(1) << e.u) | (std::uint32_t(1) << e.v));

    min_size_.assign(std::size_t(1) << n_, INT_MAX);
    std::uint32_t total = std::uint32_t(1) << m_;
    std::uint32_t subset = 0, odd = 0;
    int size = 0;
    for (std::uint32_t i = 0;; ++i) {
        if (size < min_size_[odd]) min_size_[odd] = size;
        if (i + 1 >= total) break;
        int b = __builtin_ctz(i + 1);
        std::uint32_t bit = std::uint32_t(1) << b;
        subset ^= bit;
        odd ^= edge_parity_[b];
        size += (subset & bit) ? 1 : -1;
    }
}

std::uint32_t JoinTable::mask_of(const VertexSet& terminals) const {
    return terminal_mask(*g_, terminals);
}

std::optional<int> JoinTable::nu_of(const VertexSet& terminals) const {
    return nu_of_mask(mask_of(terminals));
}

std::optional<int> JoinTable::nu_of_mask(std::uint32_t terminal_mask) const {
    int v = min_size_.at(terminal_mask);
    if (v == INT_MAX) return std::nullopt;
    return v;
}

std::vector<std::vector<std::uint32_t>> JoinTable::all_minimum_join_masks() const {
    std::vector<std::vector<std::uint32_t>> out(std::size_t(1) << n_);
    std::uint32_t total = std::uint32_t(1) << m_;
    std::uint32_t subset = 0, odd = 0;
    int size = 0;
    for (std::uint32_t i = 0;; ++i) {
        if (size == min_size_[odd]) out[odd].push_back(subset);
        if (i + 1 >= total) break;
        int b = __builtin_ctz(i + 1);
        std::uint32_t bit = std::uint32_t(1) << b;
        subset ^= bit;
        odd ^= edge_parity_[b];
        size += (subset & bit) ? 1 : -1;
    }
    return out;
}

EdgeSet JoinTable::edges_from_mask(std::uint32_t join_mask) const {
    return Dense(*g_).edges_from_mask(join_mask);
}

std::vector<std::vector<EdgeSet>> JoinTable::all_minimum_joins() const {
    std::vector<std::vector<EdgeSet>> out(std::size_t(1) << n_);
    Dense d(*g_);
    std::uint32_t total = std::uint32_t(1) << m_;
    std::uint32_t subset = 0, odd = 0;
    int size = 0;
    for (std::uint32_t i = 0;; ++i) {
        if (size == min_size_[odd]) out[odd].push_back(d.edges_from_mask(subset));
        if (i + 1 >= total) break;
        int b = __builtin_ctz(i + 1);
        std::uint32_t bit = std::uint32_t(1) << b;
        subset ^= bit;
        odd ^= edge_parity_[b];
        size += (subset & bit) ? 1 : -1;
    }
    return out;
}

std::vector<EdgeSet> JoinTable::minimum_joins(const VertexSet& terminals) const {
    std::uint32_t tmask = mask_of(terminals);
    std::vector<EdgeSet> out;
    if (min_size_[tmask] == INT_MAX) return out;
    Dense d(*g_);
    std::uint32_t total = std::uint32_t(1) << m_;
    std::uint32_t subset = 0, odd = 0;
    int size = 0;
    for (std::uint32_t i = 0;; ++i) {
        if (odd == tmask && size == min_size_[tmask])
            out.push_back(d.edges_from_mask(subset));
        if (i + 1 >= total) break;
        int b = __builtin_ctz(i + 1);
        std::uint32_t bit = std::uint32_t(1) << b;
        subset ^= bit;
        odd ^= edge_parity_[b];
        size += (subset & bit) ? 1 : -1;
    }
    return out;
}

// ---- instance generation ----

namespace {

int pair_index(int n, int i, int j) {
    // pairs (0,1),(0,2),...,(0,n-1),(1,2),... in lexicographic order
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

bool code_connected(int n, std::uint64_t mask) {
    if (n <= 1) return true;
    std::vector<std::uint32_t> adj(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (mask & (std::uint64_t(1) << pair_index(n, i, j))) {
                adj[i] |= std::uint32_t(1) << j;
                adj[j] |= std::uint32_t(1) << i;
            }
    std::uint32_t reached = 1;
    for (;;) {
        std::uint32_t next = reached;
        std::uint32_t frontier = reached;
        while (frontier) {
            int v = __builtin_ctz(frontier);
            frontier &= frontier - 1;
            next |= adj[v];
        }
        if (next == reached) break;
        reached = next;
    }
    return reached == (std::uint32_t(1) << n) - 1;
}

std::uint64_t canonical_code(int n, std::uint64_t mask,
                             const std::vector<std::vector<int>>& perms) {
    std::uint64_t best = ~std::uint64_t(0);
    for (const std::vector<int>& perm : perms) {
        std::uint64_t mapped = 0;
        std::uint64_t rest = mask;
        while (rest) {
            int k = __builtin_ctzll(rest);
            rest &= rest - 1;
            // invert pair_index for position k
            int i = 0;
            int upto = n - 1;
            int kk = k;
            while (kk >= upto) {
                kk -= upto;
                --upto;
                ++i;
            }
            int j = i + 1 + kk;
            int pi = perm[i];
            int pj = perm[j];
            if (pi > pj) std::swap(pi, pj);
            mapped |= std::uint64_t(1) << pair_index(n, pi, pj);
        }
        best = std::min(best, mapped);
    }
    return best;
}

} // namespace

std::vector<std::uint64_t> connected_graph_codes(int n, bool dedup) {
    require(n >= 1 && n <= 7, "exhaustive enumeration supports 1 <= n <= 7");
    int pairs = n * (n - 1) / 2;
    std::vector<std::vector<int>> perms;
    if (dedup) {
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        do {
            perms.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::vector<std::uint64_t> codes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs); ++mask) {
        if (!code_connected(n, mask)) continue;
        if (dedup && canonical_code(n, mask, perms) != mask) continue;
        codes.push_back(mask);
    }
    return codes;
}

Graph graph_from_code(int n, std::uint64_t edge_mask) {
    std::vector<VertexId> ids;
    for (int i = 0; i < n; ++i) ids.push_back(std::string(1, char('a' + i)));
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (edge_mask & (std::uint64_t(1) << pair_index(n, i, j)))
                edges.push_back({ids[i], ids[j]});
    return Graph(ids, edges);
}

Graft random_graft(std::mt19937_64& rng, int max_n) {
    require(max_n >= 1 && max_n <= 26, "random graft size out of range");
    int n = 1 + static_cast<int>(rng() % max_n);
    std::vector<VertexId> ids;
    for (int i = 0; i < n; ++i) ids.push_back(std::string(1, char('a' + i)));
    static const int kDensityPermille[] = {250, 400, 550, 700};
    int density = kDensityPermille[rng() % 4];
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (static_cast<int>(rng() % 1000) < density)
                edges.push_back({ids[i], ids[j]});
    Graph g(ids, edges);

    VertexSet terminals;
    for (const VertexSet& comp : connected_components(g)) {
        std::vector<VertexId> members(comp.begin(), comp.end());
        VertexSet chosen;
        for (const VertexId& v : members)
            if (rng() % 2 == 0) chosen.insert(v);
        if (chosen.size() % 2 != 0) {
            // repair parity by toggling one random member
            const VertexId& flip = members[rng() % members.size()];
            if (chosen.count(flip))
                chosen.erase(flip);
            else
                chosen.insert(flip);
        }
        terminals.insert(chosen.begin(), chosen.end());
    }
    return Graft(std::move(g), std::move(terminals));
}

InstanceStream::InstanceStream(StreamParams params)
    : params_(params), rng_(params.seed) {
    if (params_.exhaustive_max_n <= 0) {
        exhausted_exhaustive_ = true;
    } else {
        graph_codes_ = connected_graph_codes(1, params_.dedup);
        graph_idx_ = 0;
        current_graph_ = graph_from_code(1, graph_codes_[0]);
        terminal_mask_ = 0;
    }
}

void InstanceStream::advance_graph() {
    ++graph_idx_;
    while (graph_idx_ >= graph_codes_.size()) {
        ++phase_n_;
        if (phase_n_ > params_.exhaustive_max_n) {
            exhausted_exhaustive_ = true;
            current_graph_.reset();
            return;
        }
        graph_codes_ = connected_graph_codes(phase_n_, params_.dedup);
        graph_idx_ = 0;
    }
    current_graph_ = graph_from_code(phase_n_, graph_codes_[graph_idx_]);
    terminal_mask_ = 0;
}

std::optional<Graft> InstanceStream::next() {
    while (!exhausted_exhaustive_) {
        std::uint32_t limit = std::uint32_t(1) << phase_n_;
        while (terminal_mask_ < limit &&
               __builtin_popcount(terminal_mask_) % 2 != 0)
            ++terminal_mask_;
        if (terminal_mask_ >= limit) {
            advance_graph();
            continue;
        }
        VertexSet terminals;
        for (int i = 0; i < phase_n_; ++i)
            if (terminal_mask_ & (std::uint32_t(1) << i))
                terminals.insert(current_graph_->id_of(i));
        ++terminal_mask_;
        return Graft(*current_graph_, std::move(terminals));
    }
    if (random_emitted_ < params_.random_count) {
        ++random_emitted_;
        return random_graft(rng_, params_.random_max_n);
    }
    return std::nullopt;
}

std::optional<Graft> find_proper_refinement_witness(InstanceStream& stream) {
    while (std::optional<Graft> g = stream.next()) {
        for (const ComponentRefinement& r : refinement_report(*g))
            if (r.proper) return g;
    }
    return std::nullopt;
}

} // namespace graft::oracle
