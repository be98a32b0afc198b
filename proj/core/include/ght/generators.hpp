#pragma once

#include <cstdint>

#include "ght/graph.hpp"

namespace ght::gen {

Graph Path(int n);
Graph Cycle(int n);
Graph Complete(int n);
// Node 0 is the center.
Graph Star(int leaves);
// G(n, p), each pair independently.
Graph ErdosRenyi(int n, double p, std::uint64_t seed);
// Two copies of K_k on nodes [0,k) and [k,2k) joined by `links` edges
// (i, k+i) for i < links.
Graph TwoCliques(int k, int links);
// Random multigraph: each pair present with probability p, multiplicity
// uniform in [1, max_mult].
Graph RandomMultigraph(int n, double p, int max_mult, std::uint64_t seed);
// Copy of `g` with every edge multiplicity multiplied by `factor`.
Graph Scaled(const Graph& g, std::int64_t factor);

}  // namespace ght::gen
