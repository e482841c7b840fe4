#include "graft/distance.hpp"

namespace graft {

JoinWeighting::JoinWeighting(const Graft& host, EdgeSet join)
    : host_(&host), join_(std::move(join)) {
    for (EdgeId e : join_)
        host.graph().edge(e); // validates membership
}

int JoinWeighting::weight(EdgeId e) const {
    host_->graph().edge(e);
    return join_.count(e) ? -1 : 1;
}

int path_weight(const JoinWeighting& w, const Path& p) {
    if (!p.valid_in(w.host().graph()))
        throw InputError("not a simple path of the host graph");
    return weight_under(w.join(), p.edges);
}

int weight_under(const EdgeSet& join, const std::vector<EdgeId>& edges) {
    int total = 0;
    for (EdgeId e : edges) total += join.count(e) ? -1 : 1;
    return total;
}

int dist(JoinSolver& solver, const VertexId& x, const VertexId& y) {
    solver.host().graph().index_of(x);
    solver.host().graph().index_of(y);
    if (!solver.same_component(x, y))
        throw DomainError("distance undefined across components: '" + x +
                          "' and '" + y + "'");
    if (x == y) return 0;
    VertexSet toggled = symmetric_difference(solver.host().terminals(), {x, y});
    return solver.nu_of(toggled) - solver.nu();
}

int dist(const Graft& g, const VertexId& x, const VertexId& y) {
    JoinSolver solver(g);
    return dist(solver, x, y);
}

int DistanceTable::at(const VertexId& u, const VertexId& v) const {
    auto it = entries.find(u <= v ? std::make_pair(u, v) : std::make_pair(v, u));
    if (it == entries.end())
        throw DomainError("no distance entry for '" + u + "', '" + v + "'");
    return it->second;
}

bool DistanceTable::contains(const VertexId& u, const VertexId& v) const {
    return entries.count(u <= v ? std::make_pair(u, v) : std::make_pair(v, u)) > 0;
}

DistanceTable distance_table(JoinSolver& solver) {
    DistanceTable table;
    const std::vector<VertexId>& vs = solver.host().graph().vertices();
    for (size_t i = 0; i < vs.size(); ++i) {
        table.entries[{vs[i], vs[i]}] = 0;
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (solver.same_component(vs[i], vs[j]))
                table.entries[{vs[i], vs[j]}] = dist(solver, vs[i], vs[j]);
    }
    return table;
}

DistanceTable distance_table(const Graft& g) {
    JoinSolver solver(g);
    return distance_table(solver);
}

} // namespace graft
