#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "graft/graft.hpp"

namespace graft {

/// A join together with its size and a minimality mark.
struct JoinCertificate {
    EdgeSet edges;
    int size = 0;
    bool minimum = false;
};

/// True iff every terminal has odd and every other vertex even degree in F.
/// Throws InputError when F contains an edge id not in the host graph.
bool is_join(const Graft& g, const EdgeSet& f);

/// Computes minimum joins and derived quantities for one host graph.
///
/// Per connected component the solver reduces to a minimum-weight perfect
/// matching on the component's terminals, weighted by unit shortest-path
/// distances, and lifts the matching back by taking the symmetric
/// difference of the matched shortest paths. The matching is solved
/// exactly (blossom algorithm).
///
/// Join sizes are memoized per terminal set (keyed by a bitmask over the
/// sorted vertex order), so repeated distance and allowed-edge queries
/// against the same graph stay cheap. A solver instance is not
/// synchronized: confine it to one thread.
class JoinSolver {
public:
    explicit JoinSolver(Graft host);

    const Graft& host() const { return host_; }

    /// ν of the host terminal set.
    int nu() { return nu_of(host_.terminals()); }
    /// Deterministic minimum join of the host terminal set. Ties between
    /// equal-length shortest paths are broken toward lexicographically
    /// smallest edge-id sequences.
    EdgeSet min_join() { return min_join_of(host_.terminals()); }
    JoinCertificate certify();
    /// Edges contained in at least one minimum join of the host graft.
    /// An edge uv qualifies iff deleting it and toggling u,v in the
    /// terminal set drops ν by exactly one.
    const EdgeSet& allowed();

    /// ν(G, T) for an arbitrary terminal set over the host graph.
    /// Throws InputError when (G, T) is not a graft.
    int nu_of(const VertexSet& terminals);
    /// Like nu_of, but yields nullopt instead of throwing when (G, T)
    /// admits no join.
    std::optional<int> nu_if_graft(const VertexSet& terminals);
    EdgeSet min_join_of(const VertexSet& terminals);
    EdgeSet allowed_of(const VertexSet& terminals);

    bool same_component(const VertexId& x, const VertexId& y) const;

private:
    using Mask = std::vector<std::uint64_t>;

    Mask mask_of(const VertexSet& terminals) const;
    bool parity_ok(const Mask& m) const;
    int nu_mask(const Mask& m, const VertexSet& terminals);
    JoinSolver& deleted_edge_solver(int edge_pos);

    Graft host_;
    int n_ = 0;
    std::vector<int> comp_;               // component index per vertex
    std::vector<Mask> comp_masks_;
    std::vector<std::vector<int>> sp_;    // unit shortest-path lengths, -1 apart
    std::map<Mask, int> nu_cache_;
    std::map<Mask, EdgeSet> allowed_cache_;
    std::vector<std::unique_ptr<JoinSolver>> edge_deleted_;
};

/// Convenience one-shot wrappers. For repeated queries against one graph
/// prefer a JoinSolver, which shares its memo across calls.
int nu(const Graft& g);
JoinCertificate min_join(const Graft& g);
bool is_minimum_join(const Graft& g, const EdgeSet& f);
EdgeSet allowed_edges(const Graft& g);

} // namespace graft
