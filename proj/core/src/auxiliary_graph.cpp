#include "ght/auxiliary_graph.hpp"

#include <stdexcept>

namespace ght {

std::vector<char> AuxiliaryGraph::ExpandSide(const std::vector<char>& local_side) const {
  std::vector<char> out(root_to_local.size(), 0);
  for (size_t x = 0; x < root_to_local.size(); ++x) out[x] = local_side[root_to_local[x]];
  return out;
}

int AuxiliaryGraph::OriginalCount(const std::vector<char>& local_side) const {
  int k = 0;
  for (int v = 0; v < num_original; ++v) k += local_side[v] != 0;
  return k;
}

AuxiliaryGraph BuildAuxiliaryGraph(const Graph& g, const PartitionTree& t, int i) {
  if (i < 0 || i >= t.num_super()) throw std::out_of_range("unknown super-node");
  if (g.num_nodes() != t.num_nodes()) throw std::invalid_argument("tree does not match graph");
  AuxiliaryGraph aux;
  aux.super = i;
  const auto& members = t.Members(i);
  aux.num_original = static_cast<int>(members.size());
  aux.root_to_local.assign(g.num_nodes(), -1);
  std::vector<std::vector<NodeId>> contents;
  std::vector<bool> contracted;
  for (NodeId v : members) {
    aux.root_to_local[v] = static_cast<int>(aux.local_to_root.size());
    aux.local_to_root.push_back(v);
    aux.contracted_neighbor.push_back(-1);
    contents.push_back({v});
    contracted.push_back(false);
  }
  // One contracted node per neighbouring component, found by walking the
  // super-node tree away from i.
  std::vector<int> local_of_super(t.num_super(), -1);
  for (int e : t.Incident(i)) {
    const int j = t.OtherEnd(e, i);
    const int local = static_cast<int>(aux.local_to_root.size());
    aux.local_to_root.push_back(-1);
    aux.contracted_neighbor.push_back(j);
    contracted.push_back(true);
    contents.emplace_back();
    std::vector<int> stack{j};
    local_of_super[j] = local;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (NodeId v : t.Members(x)) {
        aux.root_to_local[v] = local;
        contents[local].push_back(v);
      }
      for (int f : t.Incident(x)) {
        int y = t.OtherEnd(f, x);
        if (y != i && local_of_super[y] == -1) {
          local_of_super[y] = local;
          stack.push_back(y);
        }
      }
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    NodeId a = aux.root_to_local[e.u], b = aux.root_to_local[e.v];
    if (a != b) edges.push_back({a, b, e.mult, e.eps});
  }
  aux.graph = Graph(std::move(contents), std::move(contracted), std::move(edges));
  return aux;
}

int GhRefine(PartitionTree& tree, const AuxiliaryGraph& aux, const CutSide& cut, NodeId s,
             NodeId t) {
  const int n = aux.graph.num_nodes();
  if (static_cast<int>(cut.side.size()) != n) {
    throw std::invalid_argument("cut not expressed over the auxiliary graph");
  }
  if (s < 0 || t < 0 || s >= aux.num_original || t >= aux.num_original) {
    throw std::invalid_argument("terminals must be members of the super-node");
  }
  if ((cut.side[s] != 0) == (cut.side[t] != 0)) {
    throw std::invalid_argument("cut does not separate the terminals");
  }
  return tree.Refine(aux.super, aux.ExpandSide(cut.side), cut.value);
}

}  // namespace ght
