#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "graft/graft.hpp"
#include "graft/structure.hpp"

namespace graft::oracle {

// Exhaustive ground-truth counterparts of the solver operations, computed
// straight from the definitions by enumerating edge subsets, simple paths
// and circuits. Everything here is bounded and refuses oversized inputs
// instead of truncating silently.

inline constexpr int kDefaultMaxJoinEdges = 16;

/// All subsets of E with odd degree exactly on the terminals, in
/// increasing order of their edge-position bitmask.
std::vector<EdgeSet> enumerate_joins(const Graft& g,
                                     int max_edges = kDefaultMaxJoinEdges);
std::vector<EdgeSet> enumerate_minimum_joins(const Graft& g,
                                             int max_edges = kDefaultMaxJoinEdges);

int brute_nu(const Graft& g, int max_edges = kDefaultMaxJoinEdges);

/// Union of all minimum joins.
EdgeSet brute_allowed(const Graft& g, int max_edges = kDefaultMaxJoinEdges);

/// Minimum join-weighted simple-path length between x and y, evaluated for
/// every enumerated minimum join; all joins must agree (and do). Throws
/// DomainError for vertices in different components.
int brute_dist(const Graft& g, const VertexId& x, const VertexId& y,
               int max_edges = kDefaultMaxJoinEdges);

/// The relation u ~ v evaluated from its raw definition: u = v, or u and v
/// are connected through edges of some minimum join's union (allowed
/// edges) and ν(G, T △ {u,v}) = ν(G, T). Indexed by vertex position.
std::vector<std::vector<bool>> brute_kl_relation(const Graft& g,
                                                 int max_edges = kDefaultMaxJoinEdges);

/// Classes of the raw relation, ordered by smallest member. Throws Error
/// if the relation fails to be transitive (it never does).
std::vector<VertexSet> brute_kl(const Graft& g, int max_edges = kDefaultMaxJoinEdges);

// ---- matching-based reference for factorizable graphs ----

bool is_factorizable(const Graph& g);

/// The perfect-matching partition: u ~ v iff u = v, or u and v are
/// connected through edges lying in some perfect matching and G - u - v
/// has no perfect matching. Throws InputError for non-factorizable input.
std::vector<VertexSet> matching_kl(const Graph& g);

// ---- path and circuit enumeration ----

/// Every simple path between x and y (x != y), by depth-first search.
std::vector<Path> simple_paths(const Graph& g, const VertexId& x, const VertexId& y);

/// Minimum join-weighted simple path between x and y; nullopt when y is
/// unreachable from x. `x == y` yields the single-vertex path of weight 0.
std::optional<Path> min_weight_simple_path(const Graph& g, const EdgeSet& join,
                                           const VertexId& x, const VertexId& y);

/// Edge sets of all simple circuits (cycles of length >= 3).
std::vector<EdgeSet> simple_circuits(const Graph& g);

// ---- per-graph join tables over every terminal set at once ----

/// One subset sweep gives the minimum join size for every possible
/// odd-degree vertex set of a graph, so all terminal sets of one graph
/// share the enumeration work.
class JoinTable {
public:
    explicit JoinTable(const Graph& g, int max_edges = 20);

    /// Minimum join size for the terminal set, or nullopt when no join
    /// exists (odd parity in some component).
    std::optional<int> nu_of(const VertexSet& terminals) const;
    std::optional<int> nu_of_mask(std::uint32_t terminal_mask) const;

    /// All minimum joins for every terminal-set mask, one extra sweep.
    /// Outer index: terminal mask over vertex positions.
    std::vector<std::vector<EdgeSet>> all_minimum_joins() const;
    /// Same, with joins as edge-position masks.
    std::vector<std::vector<std::uint32_t>> all_minimum_join_masks() const;

    std::uint32_t mask_of(const VertexSet& terminals) const;
    std::vector<EdgeSet> minimum_joins(const VertexSet& terminals) const;
    EdgeSet edges_from_mask(std::uint32_t join_mask) const;

private:
    const Graph* g_;
    int n_, m_;
    std::vector<std::uint32_t> edge_parity_; // endpoint mask per edge position
    std::vector<int> min_size_;              // per odd-set mask; INT_MAX if none
};

// ---- instance generation ----

struct StreamParams {
    int exhaustive_max_n = 6;  ///< all connected graphs up to this size
    bool dedup = true;         ///< one representative per isomorphism class
    int random_count = 0;      ///< seeded random grafts appended after
    int random_max_n = 10;
    std::uint64_t seed = 1;
};

/// Streams grafts: first every connected graph with at most
/// `exhaustive_max_n` vertices (optionally deduplicated by a brute-force
/// canonical form) paired with every even-size terminal set, then
/// `random_count` seeded random grafts. Reproducible for a fixed seed.
class InstanceStream {
public:
    explicit InstanceStream(StreamParams params);

    std::optional<Graft> next();
    const StreamParams& params() const { return params_; }

private:
    void advance_graph();

    StreamParams params_;
    int phase_n_ = 1;
    std::vector<std::uint64_t> graph_codes_; // edge masks for current n
    size_t graph_idx_ = 0;
    std::optional<Graph> current_graph_;
    std::uint32_t terminal_mask_ = 0;
    bool exhausted_exhaustive_ = false;
    int random_emitted_ = 0;
    std::mt19937_64 rng_;
};

/// Connected graphs on vertices "a", "b", ... as edge masks over the
/// C(n,2) vertex pairs in lexicographic order.
std::vector<std::uint64_t> connected_graph_codes(int n, bool dedup);
Graph graph_from_code(int n, std::uint64_t edge_mask);

/// Random graft on up to max_n vertices; per-component terminal parity is
/// repaired after sampling.
Graft random_graft(std::mt19937_64& rng, int max_n);

/// First streamed graft where the host partition restricted to some
/// factor-component strictly refines the component's standalone partition.
std::optional<Graft> find_proper_refinement_witness(InstanceStream& stream);

} // namespace graft::oracle
