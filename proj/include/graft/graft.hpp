#pragma once

#include "graft/graph.hpp"

namespace graft {

/// True iff every connected component of `g` contains an even number of
/// terminals. Throws InputError if a terminal is not a vertex of `g`.
bool is_graft(const Graph& g, const VertexSet& terminals);

/// A graph together with a terminal set of even size per connected
/// component; exactly the pairs that admit a join. Immutable after
/// construction.
class Graft {
public:
    Graft() = default;

    /// Throws InputError naming an offending component when some component
    /// has an odd number of terminals.
    Graft(Graph graph, VertexSet terminals);

    const Graph& graph() const { return graph_; }
    const VertexSet& terminals() const { return terminals_; }
    bool is_terminal(const VertexId& v) const { return terminals_.count(v) > 0; }

    bool operator==(const Graft& other) const {
        return graph_ == other.graph_ && terminals_ == other.terminals_;
    }

private:
    Graph graph_;
    VertexSet terminals_;
};

/// Sub-graft induced by a vertex set, with terminals restricted to it.
/// Throws InputError if the restriction violates parity.
Graft induced_subgraft(const Graft& g, const VertexSet& x);

} // namespace graft
