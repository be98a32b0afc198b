#pragma once

#include <cstdint>
#include <vector>

#include "ght/graph.hpp"

namespace ght {

using Demand = std::vector<std::int64_t>;

struct ExpanderPart {
  std::vector<NodeId> nodes;
  Demand demand;  // d_i(v) = d(v) + boundary weight of v, aligned with nodes
  int size_g = 0;
  bool certified = false;
};

struct DecompositionConfig {
  int exact_limit = 20;      // exhaustive enumeration up to this many nodes
  int spectral_limit = 300;  // dense eigen-solve up to this many nodes
  int power_iterations = 200;
};

struct Decomposition {
  std::vector<ExpanderPart> parts;
  std::int64_t boundary_weight = 0;
  // boundary_weight / (phi * d(V)); 0 when d(V) = 0.
  double b_factor = 0;
  int certified_parts = 0;
};

// Partition into parts that are (phi, d_i)-expanders. Parts no larger than
// the exact or spectral limit are certified; larger parts that pass the
// spectral sweep screen are returned with certified = false.
Decomposition DecomposeWithDemands(const Graph& g, const Demand& d, double phi,
                                   const DecompositionConfig& config = {});

enum class Expansion { kCertified, kViolated, kUnknown };

struct ExpansionCheck {
  Expansion status = Expansion::kUnknown;
  std::vector<char> cut;  // violating side when status is kViolated
  double ratio = 0;       // demand conductance of `cut`
};

// Checks phi-expansion of `g` under demand `d`. Sides whose smaller
// demand is zero always pass.
ExpansionCheck CheckExpansion(const Graph& g, const Demand& d, double phi,
                              const DecompositionConfig& config = {});

// Exhaustive check for graphs with at most `limit` nodes; larger graphs
// are screened spectrally and report true only when certified.
bool VerifyExpansion(const Graph& g, const Demand& d, double phi, int limit = 20);

// Demand conductance of one side; +infinity when the smaller demand is 0.
double DemandConductance(const Graph& g, const Demand& d, const std::vector<char>& side);

int SizeG(const Graph& g, const std::vector<NodeId>& nodes);

}  // namespace ght
