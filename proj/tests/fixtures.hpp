#pragma once

#include <string>
#include <vector>

#include "graft/graft.hpp"

namespace fixtures {

using graft::Graft;
using graft::Graph;
using graft::VertexId;
using graft::VertexSet;

inline Graph graph(std::vector<VertexId> vs,
                   std::vector<std::pair<VertexId, VertexId>> es) {
    return Graph(std::move(vs), es);
}

/// path a-b-c
inline Graph path3() { return graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }

/// cycle 1-2-3-4, edge ids 0:12 1:23 2:34 3:41
inline Graph cycle4() {
    return graph({"1", "2", "3", "4"},
                 {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "1"}});
}

/// star with center c and leaves l1,l2,l3
inline Graph star3() {
    return graph({"c", "l1", "l2", "l3"}, {{"c", "l1"}, {"c", "l2"}, {"c", "l3"}});
}

inline Graph triangle() {
    return graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

inline Graft path3_ends() { return Graft(path3(), {"a", "c"}); }
inline Graft cycle4_all() { return Graft(cycle4(), {"1", "2", "3", "4"}); }
inline Graft star3_all() { return Graft(star3(), {"c", "l1", "l2", "l3"}); }

/// 4-cycle plus a pendant terminal edge x-y attached at 2 and 4, every
/// vertex terminal. Two factor-components; inside the cycle component the
/// host classes {1},{3},{2,4} properly refine the standalone classes
/// {1,3},{2,4}.
inline Graft refinement_witness() {
    Graph g = graph({"1", "2", "3", "4", "x", "y"},
                    {{"1", "2"},
                     {"2", "3"},
                     {"3", "4"},
                     {"4", "1"},
                     {"x", "y"},
                     {"2", "x"},
                     {"4", "y"}});
    return Graft(std::move(g), {"1", "2", "3", "4", "x", "y"});
}

} // namespace fixtures
