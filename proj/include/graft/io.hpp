#pragma once

#include "graft/graft.hpp"
#include "graft/sebo.hpp"
#include "graft/structure.hpp"

namespace graft {

/// In-memory form of the graft file format:
///
///   # comment
///   graft 1          (optional version directive, defaults to 1)
///   v <id> [t]       (vertex, optional terminal marker)
///   e <id> <id>      (edge)
///
/// Declaration order is preserved and significant for round-trips.
struct GraftDocument {
    int version = 1;
    struct VertexDecl {
        VertexId id;
        bool terminal = false;
        bool operator==(const VertexDecl&) const = default;
    };
    struct EdgeDecl {
        VertexId u, v;
        bool operator==(const EdgeDecl&) const = default;
    };
    std::vector<VertexDecl> vertices;
    std::vector<EdgeDecl> edges;

    bool operator==(const GraftDocument&) const = default;
};

/// Parse the text format; throws InputError with line/column positions for
/// malformed input, duplicate declarations, unknown endpoints or self-loops.
GraftDocument parse_graft_document(const std::string& text);

/// Canonical serialization; parse(serialize(doc)) == doc.
std::string serialize(const GraftDocument& doc);

/// Build the validated graft (throws InputError with a parity diagnostic
/// naming the offending component).
Graft to_graft(const GraftDocument& doc);
GraftDocument to_document(const Graft& g);

/// Convenience: parse + validate.
Graft parse_graft(const std::string& text);

/// One edge per line, "  <id> <id>"; resolves endpoint pairs to edge ids.
EdgeSet parse_join_file(const std::string& text, const Graph& host);

/// Graphviz DOT rendering: terminals are black nodes, non-terminals white,
/// allowed edges thick, and each partition class a gray cluster.
std::string draw_partition(const Graft& g, const KLPartition& partition,
                           const EdgeSet& allowed);

/// DOT rendering of a decomposition: the level-0 core vertices form one
/// cluster and every negative component its own; the root is doubly
/// circled and join edges are drawn dashed.
std::string draw_decomposition(const SeboDecomposition& d, const EdgeSet& allowed);

} // namespace graft
