#include "ght/gomory_hu.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ght/sparsify.hpp"

namespace ght {

PartitionTree ClassicGomoryHu(const Graph& g) {
  const int n = g.num_nodes();
  PartitionTree tree(n);
  while (!tree.IsFull()) {
    int best = -1;
    NodeId best_min = 0;
    for (int i = 0; i < tree.num_super(); ++i) {
      const auto& m = tree.Members(i);
      NodeId lo = *std::min_element(m.begin(), m.end());
      if (best == -1 || m.size() > tree.Members(best).size() ||
          (m.size() == tree.Members(best).size() && lo < best_min)) {
        best = i;
        best_min = lo;
      }
    }
    std::vector<NodeId> m = tree.Members(best);
    std::sort(m.begin(), m.end());
    AuxiliaryGraph aux = BuildAuxiliaryGraph(g, tree, best);
    NodeId s = aux.root_to_local[m[0]], t = aux.root_to_local[m[1]];
    GhRefine(tree, aux, MaxFlowMinCut(aux.graph, s, t), s, t);
  }
  return tree;
}

PartitionTree GusfieldWithOracle(int n, const CutOracle& oracle) {
  std::vector<NodeId> parent(n, 0);
  std::vector<Weight> fl(n);
  for (NodeId s = 1; s < n; ++s) {
    const NodeId t = parent[s];
    CutSide cut = oracle(s, t);
    if (!cut.side[s] || cut.side[t]) throw std::logic_error("oracle cut has wrong orientation");
    fl[s] = cut.value;
    for (NodeId i = 0; i < n; ++i) {
      if (i != s && cut.side[i] && parent[i] == t) parent[i] = s;
    }
    if (cut.side[parent[t]]) {
      parent[s] = parent[t];
      parent[t] = s;
      fl[s] = fl[t];
      fl[t] = cut.value;
    }
  }
  std::vector<std::vector<NodeId>> supers(n);
  for (NodeId v = 0; v < n; ++v) supers[v] = {v};
  std::vector<TreeEdge> edges;
  for (NodeId s = 1; s < n; ++s) edges.push_back({s, parent[s], fl[s]});
  return PartitionTree(n, std::move(supers), std::move(edges));
}

PartitionTree Gusfield(const Graph& g) {
  return GusfieldWithOracle(g.num_nodes(),
                            [&g](NodeId s, NodeId t) { return MaxFlowMinCut(g, s, t); });
}

PartitionTree KPartialTree(const Graph& g, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const int n = g.num_nodes();
  const Graph h = NiSparsify(g, k + 1);
  PartitionTree tree(n);
  // Each super-node keeps a root; `high[v]` records lambda(root, v) > k.
  // Such v can never be cut away from its root by a cut of value <= k.
  std::vector<NodeId> root{0};
  std::vector<char> high(n, 0);
  std::vector<int> work{0};
  while (!work.empty()) {
    const int i = work.back();
    NodeId t = -1;
    for (NodeId v : tree.Members(i)) {
      if (v != root[i] && !high[v] && (t == -1 || v < t)) t = v;
    }
    if (t == -1) {
      work.pop_back();
      continue;
    }
    AuxiliaryGraph aux = BuildAuxiliaryGraph(h, tree, i);
    const NodeId ls = aux.root_to_local[root[i]], lt = aux.root_to_local[t];
    CutSide cut = MaxFlowMinCut(aux.graph, ls, lt);
    if (cut.value.base > k) {
      high[t] = 1;
      continue;
    }
    // The new super-node takes the root's side; i keeps t's side.
    const int fresh = GhRefine(tree, aux, cut, ls, lt);
    root.push_back(root[i]);
    const auto& rest = tree.Members(i);
    root[i] = *std::min_element(rest.begin(), rest.end());
    work.push_back(fresh);
  }
  return tree;
}

PartitionTree Assemble(const Graph& g, const PartitionTree& partial,
                       const std::map<int, PartitionTree>& subtrees) {
  PartitionTree tree = partial;
  for (int i = 0; i < partial.num_super(); ++i) {
    if (partial.Members(i).size() < 2) continue;
    auto it = subtrees.find(i);
    if (it == subtrees.end()) throw std::invalid_argument("missing subtree for a super-node");
    const PartitionTree& sub = it->second;
    AuxiliaryGraph aux = BuildAuxiliaryGraph(g, partial, i);
    if (sub.num_nodes() != aux.graph.num_nodes() || !sub.IsFull()) {
      throw std::invalid_argument("subtree does not match its auxiliary graph");
    }
    // Applying the subtree's edges lightest first keeps each step a valid
    // Gomory-Hu step: the edge is a path minimum inside its component.
    std::vector<TreeEdge> edges = sub.NodeEdges();
    std::stable_sort(edges.begin(), edges.end(),
                     [](const TreeEdge& a, const TreeEdge& b) { return a.w < b.w; });
    std::vector<int> pieces{i};
    const int k = sub.num_nodes();
    std::vector<std::vector<int>> adj(k);
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      adj[edges[e].a].push_back(e);
      adj[edges[e].b].push_back(e);
    }
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      std::vector<char> local(k, 0);
      std::vector<int> stack{edges[e].b};
      local[edges[e].b] = 1;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int f : adj[x]) {
          if (f == e) continue;
          int y = edges[f].a == x ? edges[f].b : edges[f].a;
          if (!local[y]) {
            local[y] = 1;
            stack.push_back(y);
          }
        }
      }
      std::vector<char> side = aux.ExpandSide(local);
      for (int piece : pieces) {
        bool in = false, out = false;
        for (NodeId v : tree.Members(piece)) (side[v] ? in : out) = true;
        if (in && out) {
          pieces.push_back(tree.Refine(piece, side, edges[e].w));
          break;
        }
      }
    }
  }
  return tree;
}

PartitionTree NoncrossingTree(const Graph& g, NodeId p, const std::vector<CutSide>& cuts) {
  const int n = g.num_nodes();
  std::vector<int> order(cuts.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> size(cuts.size());
  for (size_t i = 0; i < cuts.size(); ++i) {
    if (static_cast<int>(cuts[i].side.size()) != n) throw std::invalid_argument("cut size mismatch");
    if (cuts[i].side[p]) throw std::invalid_argument("cut contains the pivot");
    size[i] = cuts[i].Size();
  }
  for (size_t a = 0; a < cuts.size(); ++a) {
    for (size_t b = a + 1; b < cuts.size(); ++b) {
      int both = 0;
      for (NodeId v = 0; v < n; ++v) both += cuts[a].side[v] && cuts[b].side[v];
      if (both != 0 && both != size[a] && both != size[b]) {
        throw std::invalid_argument("cuts cross");
      }
    }
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return size[a] < size[b]; });
  PartitionTree tree(n);
  for (int i : order) {
    const CutSide& cut = cuts[i];
    NodeId v = cut.t >= 0 && cut.side[cut.t] ? cut.t : cut.s;
    if (v < 0 || !cut.side[v]) throw std::invalid_argument("cut has no terminal on its side");
    const int x = tree.SuperOf(p);
    if (tree.SuperOf(v) != x) throw std::invalid_argument("terminal already separated from pivot");
    tree.Refine(x, cut.side, cut.value);
  }
  return tree;
}

}  // namespace ght
