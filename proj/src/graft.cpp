#include "graft/graft.hpp"

#include <sstream>

namespace graft {

namespace {

std::string describe_component(const VertexSet& comp, size_t nterminals) {
    std::ostringstream os;
    os << "component {";
    bool first = true;
    for (const VertexId& v : comp) {
        if (!first) os << ", ";
        os << v;
        first = false;
    }
    os << "} contains " << nterminals << " terminal"
       << (nterminals == 1 ? "" : "s") << " (even count required)";
    return os.str();
}

} // namespace

bool is_graft(const Graph& g, const VertexSet& terminals) {
    for (const VertexId& t : terminals)
        if (!g.has_vertex(t)) throw InputError("unknown terminal '" + t + "'");
    for (const VertexSet& comp : connected_components(g)) {
        size_t count = 0;
        for (const VertexId& v : comp)
            if (terminals.count(v)) ++count;
        if (count % 2 != 0) return false;
    }
    return true;
}

Graft::Graft(Graph graph, VertexSet terminals)
    : graph_(std::move(graph)), terminals_(std::move(terminals)) {
    for (const VertexId& t : terminals_)
        if (!graph_.has_vertex(t)) throw InputError("unknown terminal '" + t + "'");
    for (const VertexSet& comp : connected_components(graph_)) {
        size_t count = 0;
        for (const VertexId& v : comp)
            if (terminals_.count(v)) ++count;
        if (count % 2 != 0)
            throw InputError("terminal parity violation: " +
                             describe_component(comp, count));
    }
}

Graft induced_subgraft(const Graft& g, const VertexSet& x) {
    Graph sub = g.graph().induced_subgraph(x);
    VertexSet t;
    for (const VertexId& v : x)
        if (g.is_terminal(v)) t.insert(v);
    return Graft(std::move(sub), std::move(t));
}

} // namespace graft
