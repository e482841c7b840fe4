#pragma once

#include <vector>

#include "graft/error.hpp"

namespace graft {

/// Input edge for the matching solvers: endpoint indices and a weight.
struct WeightedEdge {
    int u = 0;
    int v = 0;
    long long weight = 0;
};

/// Exact maximum-weight matching on a general graph with `n` vertices
/// (Edmonds' blossom algorithm, primal-dual formulation). Returns the mate
/// of each vertex, -1 for unmatched. With `max_cardinality` set the result
/// has maximum cardinality and, among those, maximum weight.
///
/// Deterministic: depends only on the order of `edges`.
std::vector<int> max_weight_matching(int n, const std::vector<WeightedEdge>& edges,
                                     bool max_cardinality);

/// Exact minimum-weight perfect matching. Throws DomainError when the graph
/// has no perfect matching.
std::vector<int> min_weight_perfect_matching(int n,
                                             const std::vector<WeightedEdge>& edges);

} // namespace graft
