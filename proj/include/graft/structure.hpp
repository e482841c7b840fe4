#pragma once

#include <optional>

#include "graft/distance.hpp"
#include "graft/graft.hpp"
#include "graft/join.hpp"

namespace graft {

/// A maximal set of vertices pairwise connected through allowed edges,
/// together with all edges of the host graph lying inside it (allowed or
/// not, matching the induced-subgraph convention).
struct FactorComponent {
    VertexSet vertices;
    EdgeSet edges;

    bool operator==(const FactorComponent& o) const {
        return vertices == o.vertices && edges == o.edges;
    }
};

/// Factor-components ordered by smallest contained vertex. Edges between
/// distinct factor-components are exactly the non-allowed inter-component
/// edges; vertices touching no allowed edge form singleton components.
std::vector<FactorComponent> factor_components(JoinSolver& solver);
std::vector<FactorComponent> factor_components(const Graft& g);

/// The equivalence u ~ v: u equals v, or u and v are factor-connected and
/// toggling both in the terminal set leaves ν unchanged. Decided via
/// distance: for factor-connected u != v exactly one of dist = 0 (related)
/// and dist < 0 holds.
bool same_class(JoinSolver& solver, const VertexId& u, const VertexId& v);
bool same_class(const Graft& g, const VertexId& u, const VertexId& v);

/// The partition of V(G) into ~ classes, grouped by factor-component.
struct KLPartition {
    std::vector<VertexSet> classes;      ///< ordered by smallest member
    std::vector<int> class_component;    ///< index into components per class
    std::vector<FactorComponent> components;
};

KLPartition kl_partition(JoinSolver& solver);
KLPartition kl_partition(const Graft& g);

/// The classes of the partition lying inside component H. Throws
/// InputError when H is not one of the partition's components.
std::vector<VertexSet> kl_classes_of_component(const KLPartition& p,
                                               const FactorComponent& h);

/// A comb-bipartite certificate: the graph is bipartite, the tooth side
/// consists of terminals only, and ν equals the tooth count. When both
/// orientations qualify (for every component), `swap_also_valid` is set
/// and swapping spine and tooth yields a second valid view.
struct CombBipartiteView {
    VertexSet spine;
    VertexSet tooth;
    bool swap_also_valid = false;
};

/// Recognize comb-bipartiteness. Verification uses a single minimum join:
/// a tooth side qualifies iff it contains terminals only and every tooth
/// vertex meets the join in exactly one edge. In components where both
/// sides qualify the side not containing the component's smallest vertex
/// becomes the tooth.
std::optional<CombBipartiteView> is_comb_bipartite(JoinSolver& solver);
std::optional<CombBipartiteView> is_comb_bipartite(const Graft& g);

/// Whether (G, T) is comb-bipartite with exactly the given tooth set:
/// every edge has one end in `tooth`, tooth vertices are terminals, and
/// ν = |tooth|.
bool comb_bipartite_with_tooth(JoinSolver& solver, const VertexSet& tooth);

/// Per factor-component comparison between the host partition restricted
/// to the component and the partition of the component taken as a graft
/// of its own. The former always refines the latter; `proper` marks
/// components where the refinement is strict.
struct ComponentRefinement {
    FactorComponent component;
    std::vector<VertexSet> host_classes;       ///< classes of (G,T) inside H
    std::vector<VertexSet> standalone_classes; ///< classes of (H, T ∩ V(H))
    bool refines = false;
    bool proper = false;
};

std::vector<ComponentRefinement> refinement_report(JoinSolver& solver);
std::vector<ComponentRefinement> refinement_report(const Graft& g);

} // namespace graft
