#pragma once

#include <optional>

#include "graft/distance.hpp"
#include "graft/graft.hpp"
#include "graft/join.hpp"
#include "graft/structure.hpp"

namespace graft {

/// One connected component K of the core minus the level-0 set, together
/// with its join anchors: the unique join edge of the cut around K joins
/// `anchor_inner` (in K) to `anchor_level0` (in the level-0 set). The
/// anchors stay unset if the cut does not meet the join exactly once,
/// which verification reports as a failure.
struct NegativeComponent {
    VertexSet vertices;
    EdgeSet edges;
    VertexId contracted_name;              ///< image vertex in the contracted graph
    EdgeSet cut_join_edges;                ///< join edges leaving K in the host graph
    std::optional<VertexId> anchor_inner;  ///< endpoint inside K
    std::optional<VertexId> anchor_level0; ///< endpoint in the level-0 set
    std::optional<EdgeId> anchor_edge;
};

/// The root-distance decomposition of a graft under a fixed minimum join:
/// the level-0 set (distance 0 from the root), the negative set, the core
/// component through the root, and the bipartite contraction of the core
/// with one tooth per negative component.
struct SeboDecomposition {
    Graft host;
    VertexId root;
    EdgeSet join;

    VertexSet level0;    ///< distance 0 from the root (within its component)
    VertexSet negative;  ///< distance < 0 from the root
    VertexSet core;      ///< vertices of the core component Q through the root
    Graph core_graph;    ///< core subgraph: level<=0 vertices, level-0 inner edges removed

    std::vector<NegativeComponent> components; ///< ordered by smallest vertex

    Graph contracted_graph;                   ///< core with each K contracted
    std::map<VertexId, VertexId> contraction_map; ///< core vertex -> image
    VertexSet contracted_terminals;           ///< level-0 core terminals + all [K]

    Graft contracted_graft() const {
        return Graft(contracted_graph, contracted_terminals);
    }
    /// The join edges surviving into the contracted graph: the anchor edge
    /// of every negative component.
    EdgeSet contracted_join() const;
};

/// Build the decomposition for a root and a minimum join. Throws
/// InputError if `join` is not a minimum join or the root is unknown.
SeboDecomposition sebo_decomposition(const Graft& g, const EdgeSet& join,
                                     const VertexId& root);

/// Named verification results for the six structural claims of the
/// decomposition, evaluated by direct computation.
struct SeboChecklist {
    struct Item {
        std::string name;
        bool pass = false;
        std::string detail;
    };
    std::vector<Item> items;

    bool all_pass() const {
        for (const Item& it : items)
            if (!it.pass) return false;
        return true;
    }
};

SeboChecklist verify_sebo(const SeboDecomposition& d);

/// Given a path P of the contracted graph from a level-0 vertex to a tooth
/// [K] with join-weight exactly -1, and a target vertex v inside K, splice
/// a weight <= 0 detour through every traversed component to produce a
/// simple path of the host graph from P's start to v with weight <= -1.
/// Throws InputError when the preconditions fail.
Path lift_negative_path(const SeboDecomposition& d, const Path& contracted_path,
                        const VertexId& target);

/// The factor-component H of the root lies inside the core, and its image
/// vertices are pairwise factor-connected in the contracted graft.
bool check_core_component_image(const SeboDecomposition& d);

} // namespace graft
