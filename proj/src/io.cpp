#include "graft/io.hpp"

#include <sstream>

namespace graft {

namespace {

std::vector<std::string> tokenize(const std::string& line, std::vector<size_t>& cols) {
    std::vector<std::string> tokens;
    cols.clear();
    size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        if (line[i] == '#') break;
        size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) )
            ++i;
        tokens.push_back(line.substr(start, i - start));
        cols.push_back(start + 1);
    }
    return tokens;
}

[[noreturn]] void parse_error(size_t line, size_t col, const std::string& msg) {
    std::ostringstream os;
    os << "line " << line << ", column " << col << ": " << msg;
    throw InputError(os.str());
}

std::string dot_quote(const VertexId& v) {
    std::string out = "\"";
    for (char c : v) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += "\"";
    return out;
}

} // namespace

GraftDocument parse_graft_document(const std::string& text) {
    GraftDocument doc;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    bool saw_decl = false;
    std::set<VertexId> vertex_ids;
    std::set<std::pair<VertexId, VertexId>> edge_pairs;
    std::vector<size_t> cols;

    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> tok = tokenize(line, cols);
        if (tok.empty()) continue;

        if (tok[0] == "graft") {
            if (saw_decl)
                parse_error(lineno, cols[0], "version directive must come first");
            if (tok.size() != 2)
                parse_error(lineno, cols[0], "expected 'graft <version>'");
            try {
                doc.version = std::stoi(tok[1]);
            } catch (...) {
                parse_error(lineno, cols[1], "bad version number '" + tok[1] + "'");
            }
            if (doc.version != 1)
                parse_error(lineno, cols[1],
                            "unsupported format version " + tok[1]);
            saw_decl = true;
        } else if (tok[0] == "v") {
            saw_decl = true;
            if (tok.size() < 2 || tok.size() > 3)
                parse_error(lineno, cols[0], "expected 'v <id> [t]'");
            bool terminal = false;
            if (tok.size() == 3) {
                if (tok[2] != "t")
                    parse_error(lineno, cols[2],
                                "expected terminal marker 't', got '" + tok[2] + "'");
                terminal = true;
            }
            if (!vertex_ids.insert(tok[1]).second)
                parse_error(lineno, cols[1], "duplicate vertex '" + tok[1] + "'");
            doc.vertices.push_back({tok[1], terminal});
        } else if (tok[0] == "e") {
            saw_decl = true;
            if (tok.size() != 3)
                parse_error(lineno, cols[0], "expected 'e <id> <id>'");
            if (!vertex_ids.count(tok[1]))
                parse_error(lineno, cols[1], "unknown vertex '" + tok[1] + "'");
            if (!vertex_ids.count(tok[2]))
                parse_error(lineno, cols[2], "unknown vertex '" + tok[2] + "'");
            if (tok[1] == tok[2])
                parse_error(lineno, cols[2], "self-loop at '" + tok[1] + "'");
            auto key = tok[1] < tok[2] ? std::make_pair(tok[1], tok[2])
                                       : std::make_pair(tok[2], tok[1]);
            if (!edge_pairs.insert(key).second)
                parse_error(lineno, cols[0],
                            "duplicate edge " + tok[1] + " " + tok[2]);
            doc.edges.push_back({tok[1], tok[2]});
        } else {
            parse_error(lineno, cols[0], "unknown directive '" + tok[0] + "'");
        }
    }
    return doc;
}

std::string serialize(const GraftDocument& doc) {
    std::ostringstream os;
    os << "graft " << doc.version << "\n";
    for (const auto& v : doc.vertices) {
        os << "v " << v.id;
        if (v.terminal) os << " t";
        os << "\n";
    }
    for (const auto& e : doc.edges) os << "e " << e.u << " " << e.v << "\n";
    return os.str();
}

Graft to_graft(const GraftDocument& doc) {
    std::vector<VertexId> vertices;
    VertexSet terminals;
    for (const auto& v : doc.vertices) {
        vertices.push_back(v.id);
        if (v.terminal) terminals.insert(v.id);
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& e : doc.edges) edges.push_back({e.u, e.v});
    return Graft(Graph(std::move(vertices), edges), std::move(terminals));
}

GraftDocument to_document(const Graft& g) {
    GraftDocument doc;
    for (const VertexId& v : g.graph().vertices())
        doc.vertices.push_back({v, g.is_terminal(v)});
    for (const Graph::Edge& e : g.graph().edges())
        doc.edges.push_back({g.graph().id_of(e.u), g.graph().id_of(e.v)});
    return doc;
}

Graft parse_graft(const std::string& text) {
    return to_graft(parse_graft_document(text));
}

EdgeSet parse_join_file(const std::string& text, const Graph& host) {
    EdgeSet out;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    std::vector<size_t> cols;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> tok = tokenize(line, cols);
        if (tok.empty()) continue;
        if (tok.size() != 2)
            parse_error(lineno, cols[0], "expected '<id> <id>' per line");
        if (!host.has_vertex(tok[0]))
            parse_error(lineno, cols[0], "unknown vertex '" + tok[0] + "'");
        if (!host.has_vertex(tok[1]))
            parse_error(lineno, cols[1], "unknown vertex '" + tok[1] + "'");
        std::optional<EdgeId> id = host.edge_between(tok[0], tok[1]);
        if (!id)
            parse_error(lineno, cols[0],
                        "no edge between '" + tok[0] + "' and '" + tok[1] + "'");
        if (!out.insert(*id).second)
            parse_error(lineno, cols[0],
                        "duplicate edge " + tok[0] + " " + tok[1]);
    }
    return out;
}

namespace {

void draw_vertex(std::ostream& os, const Graft& g, const VertexId& v,
                 bool double_circle = false) {
    os << "  " << dot_quote(v) << " [shape=circle, style=filled, fillcolor="
       << (g.is_terminal(v) ? "black, fontcolor=white" : "white");
    if (double_circle) os << ", peripheries=2";
    os << "];\n";
}

void draw_edges(std::ostream& os, const Graft& g, const EdgeSet& allowed,
                const EdgeSet& dashed) {
    for (const Graph::Edge& e : g.graph().edges()) {
        os << "  " << dot_quote(g.graph().id_of(e.u)) << " -- "
           << dot_quote(g.graph().id_of(e.v));
        std::vector<std::string> attrs;
        if (allowed.count(e.id)) attrs.push_back("penwidth=2.5");
        if (dashed.count(e.id)) attrs.push_back("style=dashed");
        if (!attrs.empty()) {
            os << " [";
            for (size_t i = 0; i < attrs.size(); ++i)
                os << (i ? ", " : "") << attrs[i];
            os << "]";
        }
        os << ";\n";
    }
}

} // namespace

std::string draw_partition(const Graft& g, const KLPartition& partition,
                           const EdgeSet& allowed) {
    std::ostringstream os;
    os << "graph graft {\n";
    for (size_t c = 0; c < partition.classes.size(); ++c) {
        os << "  subgraph cluster_" << c << " {\n"
           << "    style=filled;\n    color=lightgrey;\n";
        for (const VertexId& v : partition.classes[c])
            os << "    " << dot_quote(v) << ";\n";
        os << "  }\n";
    }
    for (const VertexId& v : g.graph().vertices()) draw_vertex(os, g, v);
    draw_edges(os, g, allowed, {});
    os << "}\n";
    return os.str();
}

std::string draw_decomposition(const SeboDecomposition& d, const EdgeSet& allowed) {
    std::ostringstream os;
    os << "graph graft {\n";
    VertexSet core_level0;
    for (const VertexId& v : d.core)
        if (d.level0.count(v)) core_level0.insert(v);
    os << "  subgraph cluster_level0 {\n"
       << "    style=filled;\n    color=lightgrey;\n    label=\"level 0\";\n";
    for (const VertexId& v : core_level0) os << "    " << dot_quote(v) << ";\n";
    os << "  }\n";
    int idx = 0;
    for (const NegativeComponent& k : d.components) {
        os << "  subgraph cluster_k" << idx++ << " {\n"
           << "    style=filled;\n    color=lightgrey;\n"
           << "    label=" << dot_quote(k.contracted_name) << ";\n";
        for (const VertexId& v : k.vertices) os << "    " << dot_quote(v) << ";\n";
        os << "  }\n";
    }
    for (const VertexId& v : d.host.graph().vertices())
        draw_vertex(os, d.host, v, v == d.root);
    draw_edges(os, d.host, allowed, d.join);
    os << "}\n";
    return os.str();
}

} // namespace graft
