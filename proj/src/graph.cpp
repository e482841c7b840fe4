#include "graft/graph.hpp"

#include <algorithm>
#include <sstream>

namespace graft {

namespace {

std::string quoted(const VertexId& v) { return "'" + v + "'"; }

} // namespace

Graph::Graph(std::vector<VertexId> vertices,
             const std::vector<std::pair<VertexId, VertexId>>& edges) {
    vertices_ = std::move(vertices);
    std::sort(vertices_.begin(), vertices_.end());
    auto dup = std::adjacent_find(vertices_.begin(), vertices_.end());
    if (dup != vertices_.end())
        throw InputError("duplicate vertex " + quoted(*dup));
    build_index();

    std::set<std::pair<int, int>> seen;
    int next_id = 0;
    for (const auto& [a, b] : edges) {
        int ia = index_of(a);
        int ib = index_of(b);
        if (ia == ib) throw InputError("self-loop at vertex " + quoted(a));
        Edge e;
        e.u = std::min(ia, ib);
        e.v = std::max(ia, ib);
        e.id = next_id++;
        if (!seen.insert({e.u, e.v}).second)
            throw InputError("duplicate edge " + quoted(a) + "-" + quoted(b));
        edges_.push_back(e);
    }
    build_index();
}

Graph::Graph(std::vector<VertexId> vertices,
             std::vector<std::tuple<VertexId, VertexId, EdgeId>> edges,
             bool contracted) {
    vertices_ = std::move(vertices);
    std::sort(vertices_.begin(), vertices_.end());
    auto dup = std::adjacent_find(vertices_.begin(), vertices_.end());
    if (dup != vertices_.end())
        throw InputError("duplicate vertex " + quoted(*dup));
    contracted_ = contracted;
    build_index();

    std::set<std::pair<int, int>> seen;
    std::set<EdgeId> seen_ids;
    for (const auto& [a, b, id] : edges) {
        int ia = index_of(a);
        int ib = index_of(b);
        if (ia == ib) throw InputError("self-loop at vertex " + quoted(a));
        Edge e;
        e.u = std::min(ia, ib);
        e.v = std::max(ia, ib);
        e.id = id;
        if (!seen_ids.insert(id).second)
            throw InputError("duplicate edge id " + std::to_string(id));
        if (!seen.insert({e.u, e.v}).second && !contracted_)
            throw InputError("duplicate edge " + quoted(a) + "-" + quoted(b));
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& x, const Edge& y) { return x.id < y.id; });
    build_index();
}

void Graph::build_index() {
    vertex_index_.clear();
    for (int i = 0; i < static_cast<int>(vertices_.size()); ++i)
        vertex_index_[vertices_[i]] = i;
    edge_pos_.clear();
    adj_.assign(vertices_.size(), {});
    for (int p = 0; p < static_cast<int>(edges_.size()); ++p) {
        const Edge& e = edges_[p];
        edge_pos_[e.id] = p;
        adj_[e.u].push_back({e.v, e.id});
        adj_[e.v].push_back({e.u, e.id});
    }
}

VertexSet Graph::vertex_set() const {
    return VertexSet(vertices_.begin(), vertices_.end());
}

bool Graph::has_vertex(const VertexId& v) const {
    return vertex_index_.count(v) > 0;
}

int Graph::index_of(const VertexId& v) const {
    auto it = vertex_index_.find(v);
    if (it == vertex_index_.end())
        throw InputError("unknown vertex " + quoted(v));
    return it->second;
}

bool Graph::has_edge_id(EdgeId id) const { return edge_pos_.count(id) > 0; }

const Graph::Edge& Graph::edge(EdgeId id) const {
    auto it = edge_pos_.find(id);
    if (it == edge_pos_.end())
        throw InputError("unknown edge id " + std::to_string(id));
    return edges_[it->second];
}

std::pair<VertexId, VertexId> Graph::endpoints(EdgeId id) const {
    const Edge& e = edge(id);
    return {vertices_[e.u], vertices_[e.v]};
}

EdgeSet Graph::edge_ids() const {
    EdgeSet out;
    for (const Edge& e : edges_) out.insert(e.id);
    return out;
}

std::optional<EdgeId> Graph::edge_between(const VertexId& a, const VertexId& b) const {
    int ia = index_of(a);
    int ib = index_of(b);
    std::optional<EdgeId> best;
    for (const auto& [w, id] : adj_[ia])
        if (w == ib && (!best || id < *best)) best = id;
    return best;
}

const std::vector<std::pair<int, int>>& Graph::adjacent(int vertex_index) const {
    return adj_.at(vertex_index);
}

int Graph::degree(int vertex_index) const {
    return static_cast<int>(adj_.at(vertex_index).size());
}

void Graph::validate_member(const VertexSet& x) const {
    for (const VertexId& v : x)
        if (!has_vertex(v)) throw InputError("unknown vertex " + quoted(v));
}

Graph Graph::induced_subgraph(const VertexSet& x) const {
    validate_member(x);
    std::vector<std::tuple<VertexId, VertexId, EdgeId>> kept;
    for (const Edge& e : edges_) {
        const VertexId& a = vertices_[e.u];
        const VertexId& b = vertices_[e.v];
        if (x.count(a) && x.count(b)) kept.push_back({a, b, e.id});
    }
    return Graph(std::vector<VertexId>(x.begin(), x.end()), std::move(kept),
                 contracted_);
}

Graph Graph::without_edges(const EdgeSet& remove) const {
    for (EdgeId id : remove)
        if (!has_edge_id(id)) throw InputError("unknown edge id " + std::to_string(id));
    std::vector<std::tuple<VertexId, VertexId, EdgeId>> kept;
    for (const Edge& e : edges_)
        if (!remove.count(e.id))
            kept.push_back({vertices_[e.u], vertices_[e.v], e.id});
    return Graph(vertices_, std::move(kept), contracted_);
}

Graph Graph::subgraph(const VertexSet& vs, const EdgeSet& es) const {
    validate_member(vs);
    std::vector<std::tuple<VertexId, VertexId, EdgeId>> kept;
    for (EdgeId id : es) {
        const Edge& e = edge(id);
        const VertexId& a = vertices_[e.u];
        const VertexId& b = vertices_[e.v];
        if (!vs.count(a) || !vs.count(b))
            throw InputError("edge " + std::to_string(id) + " leaves the vertex set");
        kept.push_back({a, b, id});
    }
    return Graph(std::vector<VertexId>(vs.begin(), vs.end()), std::move(kept),
                 contracted_);
}

bool Graph::operator==(const Graph& other) const {
    if (vertices_ != other.vertices_) return false;
    if (edges_.size() != other.edges_.size()) return false;
    for (size_t i = 0; i < edges_.size(); ++i) {
        const Edge& a = edges_[i];
        const Edge& b = other.edges_[i];
        if (a.u != b.u || a.v != b.v || a.id != b.id) return false;
    }
    return true;
}

EdgeSet cut(const Graph& g, const VertexSet& x) {
    g.validate_member(x);
    EdgeSet out;
    for (const Graph::Edge& e : g.edges_) {
        bool in_u = x.count(g.vertices_[e.u]) > 0;
        bool in_v = x.count(g.vertices_[e.v]) > 0;
        if (in_u != in_v) out.insert(e.id);
    }
    return out;
}

EdgeSet induced_edges(const Graph& g, const VertexSet& x) {
    g.validate_member(x);
    EdgeSet out;
    for (const Graph::Edge& e : g.edges_)
        if (x.count(g.vertices_[e.u]) && x.count(g.vertices_[e.v]))
            out.insert(e.id);
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = ncomp;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& [w, id] : g.adjacent(v)) {
                if (comp[w] == -1) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
            }
        }
        ++ncomp;
    }
    std::vector<VertexSet> out(ncomp);
    for (int v = 0; v < n; ++v) out[comp[v]].insert(g.id_of(v));
    // Vertices are sorted, so components are already ordered by smallest id.
    return out;
}

Contraction contract(const Graph& g, const std::vector<VertexSet>& parts) {
    VertexSet used;
    for (const VertexSet& part : parts) {
        if (part.empty()) throw InputError("empty contraction part");
        for (const VertexId& v : part) {
            if (!g.has_vertex(v)) throw InputError("unknown vertex '" + v + "'");
            if (!used.insert(v).second)
                throw InputError("overlapping contraction parts at '" + v + "'");
        }
        Graph sub = g.induced_subgraph(part);
        if (connected_components(sub).size() != 1)
            throw InputError("contraction part containing '" + *part.begin() +
                             "' is not connected");
    }

    Contraction result;
    VertexSet names;
    for (const VertexId& v : g.vertices())
        if (!used.count(v)) names.insert(v);
    for (const VertexSet& part : parts) {
        VertexId name = "[" + *part.begin() + "]";
        while (names.count(name)) name = "[" + name + "]";
        names.insert(name);
        for (const VertexId& v : part) result.vertex_map[v] = name;
    }
    for (const VertexId& v : g.vertices())
        if (!used.count(v)) result.vertex_map[v] = v;

    std::vector<std::tuple<VertexId, VertexId, EdgeId>> edges;
    for (const Graph::Edge& e : g.edges()) {
        VertexId a = result.vertex_map.at(g.id_of(e.u));
        VertexId b = result.vertex_map.at(g.id_of(e.v));
        if (a == b) {
            result.dropped_loops.insert(e.id);
            continue;
        }
        edges.push_back({a, b, e.id});
    }
    result.graph = Graph(std::vector<VertexId>(names.begin(), names.end()),
                         std::move(edges), /*contracted=*/true);
    return result;
}

bool Path::valid_in(const Graph& g) const {
    if (vertices.empty()) return false;
    if (edges.size() + 1 != vertices.size()) return false;
    VertexSet seen;
    for (const VertexId& v : vertices) {
        if (!g.has_vertex(v)) return false;
        if (!seen.insert(v).second) return false;
    }
    for (size_t i = 0; i < edges.size(); ++i) {
        if (!g.has_edge_id(edges[i])) return false;
        auto [a, b] = g.endpoints(edges[i]);
        const VertexId& from = vertices[i];
        const VertexId& to = vertices[i + 1];
        if (!((a == from && b == to) || (a == to && b == from))) return false;
    }
    return true;
}

} // namespace graft
