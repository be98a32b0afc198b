#pragma once

#include <cstdint>

#include "ght/graph.hpp"

namespace ght {

// Nagamochi-Ibaraki certificate: union of the first w forests of a
// scan-first forest decomposition. Cuts of value < w keep their value;
// other cuts keep value >= w. At most w(n-1) edge copies. Perturbation
// is ignored and dropped.
Graph NiSparsify(const Graph& g, std::int64_t w);

// Largest perturbation unit drawn per edge for an n-node graph.
std::int64_t PerturbationRange(int n);

// Each edge gets eps drawn uniformly from [1, PerturbationRange(n)].
Graph Perturb(const Graph& g, std::uint64_t seed);

// NiSparsify(g, w) with the eps units of `g_pert` re-attached to the
// surviving edges. `g_pert` must have the same edges as `g`.
Graph PerturbedSparsifier(const Graph& g, const Graph& g_pert, std::int64_t w);

}  // namespace ght
