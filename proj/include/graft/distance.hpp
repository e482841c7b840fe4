#pragma once

#include "graft/graft.hpp"
#include "graft/join.hpp"

namespace graft {

/// The ±1 edge weighting induced by a join: -1 on join edges, +1 elsewhere.
class JoinWeighting {
public:
    JoinWeighting(const Graft& host, EdgeSet join);

    int weight(EdgeId e) const;
    const EdgeSet& join() const { return join_; }
    const Graft& host() const { return *host_; }

private:
    const Graft* host_;
    EdgeSet join_;
};

/// Sum of per-edge weights along a path; a single-vertex path weighs 0.
/// Throws InputError when `p` is not a simple path of the host graph.
int path_weight(const JoinWeighting& w, const Path& p);

/// Unvalidated weight of an edge sequence under a join edge set.
int weight_under(const EdgeSet& join, const std::vector<EdgeId>& edges);

/// Canonical distance between two vertices of one connected component:
/// ν(G, T △ {x, y}) − ν(G, T). Equals the minimum join-weighted length of
/// a simple x–y path for every minimum join, and does not depend on which
/// minimum join induces the weighting. Throws DomainError for vertices in
/// different components.
int dist(JoinSolver& solver, const VertexId& x, const VertexId& y);
int dist(const Graft& g, const VertexId& x, const VertexId& y);

/// All same-component distances, keyed by ordered vertex pair (u <= v);
/// the diagonal entries are present and zero.
struct DistanceTable {
    std::map<std::pair<VertexId, VertexId>, int> entries;

    int at(const VertexId& u, const VertexId& v) const;
    bool contains(const VertexId& u, const VertexId& v) const;
};

DistanceTable distance_table(JoinSolver& solver);
DistanceTable distance_table(const Graft& g);

} // namespace graft
