#pragma once

#include <map>
#include <vector>

#include "ght/flow.hpp"
#include "ght/graph.hpp"

namespace ght {

// Minimum isolating cuts for terminal set `c` against pivot `p`.
// Returned sides are pairwise disjoint and avoid p. For every v whose
// latest minimum (p,v)-cut meets `c` only in v, the side for v equals that
// latest cut; each side is the inclusion-minimal minimum cut separating v
// from c - {v} + {p}.
std::map<NodeId, CutSide> IsolatingCuts(const Graph& g, NodeId p, const std::vector<NodeId>& c);

}  // namespace ght
