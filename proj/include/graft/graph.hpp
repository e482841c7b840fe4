#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "graft/error.hpp"

namespace graft {

/// Vertex identifiers are opaque strings ordered lexicographically.
using VertexId = std::string;
using VertexSet = std::set<VertexId>;

/// Edge identifiers are stable across subgraph and contraction operations:
/// an edge of a derived graph carries the id it had in the graph it came
/// from, so results on contracted graphs can be read back in the original.
using EdgeId = int;
using EdgeSet = std::set<EdgeId>;

template <typename T>
std::set<T> symmetric_difference(const std::set<T>& a, const std::set<T>& b) {
    std::set<T> out;
    for (const T& x : a)
        if (!b.count(x)) out.insert(x);
    for (const T& x : b)
        if (!a.count(x)) out.insert(x);
    return out;
}

/// An undirected graph without self-loops. Input graphs are simple;
/// graphs produced by contraction may carry parallel edges and are
/// flagged as contracted.
class Graph {
public:
    struct Edge {
        int u = -1; ///< smaller endpoint index
        int v = -1; ///< larger endpoint index
        EdgeId id = -1;
    };

    Graph() = default;

    /// Build a simple graph. Edge ids are assigned 0..m-1 in input order.
    Graph(std::vector<VertexId> vertices,
          const std::vector<std::pair<VertexId, VertexId>>& edges);

    /// Build a graph with explicit edge records (used for subgraphs and
    /// contractions). `contracted` permits parallel edges.
    Graph(std::vector<VertexId> vertices,
          std::vector<std::tuple<VertexId, VertexId, EdgeId>> edges,
          bool contracted);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool contracted() const { return contracted_; }

    /// Vertices in lexicographic order; the position of a vertex in this
    /// list is its index.
    const std::vector<VertexId>& vertices() const { return vertices_; }
    VertexSet vertex_set() const;

    bool has_vertex(const VertexId& v) const;
    /// Index of `v` in vertices(); throws InputError for unknown ids.
    int index_of(const VertexId& v) const;
    const VertexId& id_of(int index) const { return vertices_.at(index); }

    /// Edges ordered by edge id.
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge_id(EdgeId id) const;
    const Edge& edge(EdgeId id) const;
    std::pair<VertexId, VertexId> endpoints(EdgeId id) const;
    EdgeSet edge_ids() const;

    /// Edge between two vertices, if present. For contracted graphs with
    /// parallel edges the lowest id wins.
    std::optional<EdgeId> edge_between(const VertexId& a, const VertexId& b) const;

    /// Adjacency as (neighbor index, edge id), ordered by edge id.
    const std::vector<std::pair<int, int>>& adjacent(int vertex_index) const;
    int degree(int vertex_index) const;

    /// Subgraph induced by X: vertices of X and every edge with both ends
    /// in X. Edge ids are preserved.
    Graph induced_subgraph(const VertexSet& x) const;

    /// Copy of the graph with the given edges removed (vertices kept).
    Graph without_edges(const EdgeSet& remove) const;

    /// Subgraph on the given vertices restricted to the given edges.
    Graph subgraph(const VertexSet& vertices, const EdgeSet& edges) const;

    bool operator==(const Graph& other) const;

private:
    void build_index();
    void validate_member(const VertexSet& x) const;

    std::vector<VertexId> vertices_; // sorted
    std::vector<Edge> edges_;        // sorted by id
    std::map<VertexId, int> vertex_index_;
    std::map<EdgeId, int> edge_pos_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    bool contracted_ = false;

    friend EdgeSet cut(const Graph&, const VertexSet&);
    friend EdgeSet induced_edges(const Graph&, const VertexSet&);
};

/// Edges with exactly one endpoint in X.
EdgeSet cut(const Graph& g, const VertexSet& x);

/// Edges with both endpoints in X.
EdgeSet induced_edges(const Graph& g, const VertexSet& x);

/// Partition of the vertex set into maximal connected sets, ordered by
/// smallest contained vertex id.
std::vector<VertexSet> connected_components(const Graph& g);

/// Result of contracting vertex parts into single vertices.
struct Contraction {
    Graph graph;
    /// Maps every original vertex to its image in the contracted graph.
    std::map<VertexId, VertexId> vertex_map;
    /// Edge ids dropped because both endpoints fell into the same part.
    EdgeSet dropped_loops;
};

/// Contract each part into one new vertex named "[x]" where x is the
/// smallest member. Parts must be disjoint, nonempty and connected.
/// Surviving edges keep their ids; parallel edges produced by the
/// contraction are kept as distinct edges (the result is flagged
/// contracted), while self-loops are dropped and recorded.
Contraction contract(const Graph& g, const std::vector<VertexSet>& parts);

/// A walk through distinct vertices. A single vertex with no edges is a
/// valid path; an empty Path (no vertices) is not.
struct Path {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges; ///< edges.size() + 1 == vertices.size()

    int length() const { return static_cast<int>(edges.size()); }
    bool valid_in(const Graph& g) const;
};

} // namespace graft
