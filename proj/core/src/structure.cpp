#include "ght/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace ght {

CutMembershipTree BuildCutMembershipTree(const PartitionTree& t, NodeId p) {
  if (!t.IsFull()) throw std::invalid_argument("tree is not fully resolved");
  const int n = t.num_nodes();
  if (p < 0 || p >= n) throw std::invalid_argument("node out of range");
  std::vector<std::vector<std::pair<NodeId, Weight>>> adj(n);
  for (const TreeEdge& e : t.NodeEdges()) {
    adj[e.a].emplace_back(e.b, e.w);
    adj[e.b].emplace_back(e.a, e.w);
  }
  // An edge is named by its endpoint away from p; ell[v] names the chosen edge.
  std::vector<NodeId> parent(n, -1), ell(n, -1), order{p};
  std::vector<Weight> up(n);
  std::vector<char> seen(n, 0);
  seen[p] = 1;
  for (size_t k = 0; k < order.size(); ++k) {
    const NodeId x = order[k];
    for (auto [y, w] : adj[x]) {
      if (seen[y]) continue;
      seen[y] = 1;
      parent[y] = x;
      up[y] = w;
      ell[y] = (x == p || w <= up[ell[x]]) ? y : ell[x];
      order.push_back(y);
    }
  }
  CutMembershipTree tm;
  tm.p = p;
  tm.bag_of.assign(n, -1);
  tm.bags.emplace_back();
  tm.bags[0].nodes = {p};
  tm.bags[0].value = Weight::Infinite();
  tm.bag_of[p] = 0;
  for (NodeId v : order) {
    if (v == p) continue;
    if (ell[v] == v) {
      const int b = static_cast<int>(tm.bags.size());
      tm.bags.emplace_back();
      tm.bags[b].value = up[v];
      tm.bags[b].parent = tm.bag_of[parent[v]];
      tm.bags[tm.bags[b].parent].children.push_back(b);
      tm.bag_of[v] = b;
    } else {
      tm.bag_of[v] = tm.bag_of[ell[v]];
    }
    tm.bags[tm.bag_of[v]].nodes.push_back(v);
  }
  // Bags are created parents first, so a reverse sweep collects the cuts.
  for (int b = static_cast<int>(tm.bags.size()) - 1; b >= 0; --b) {
    Bag& bag = tm.bags[b];
    bag.cut = bag.nodes;
    for (int c : bag.children) {
      bag.cut.insert(bag.cut.end(), tm.bags[c].cut.begin(), tm.bags[c].cut.end());
    }
    std::sort(bag.cut.begin(), bag.cut.end());
  }
  return tm;
}

CutMembershipTree WLargeSubtree(const CutMembershipTree& tm, std::int64_t w) {
  CutMembershipTree out;
  out.p = tm.p;
  out.bag_of.assign(tm.bag_of.size(), -1);
  std::vector<int> remap(tm.bags.size(), -1);
  for (int b = 0; b < static_cast<int>(tm.bags.size()); ++b) {
    const Bag& bag = tm.bags[b];
    if (b != 0 && (bag.value < Weight(w) || remap[bag.parent] < 0)) continue;
    remap[b] = static_cast<int>(out.bags.size());
    Bag copy = bag;
    copy.children.clear();
    copy.parent = b == 0 ? -1 : remap[bag.parent];
    if (copy.parent >= 0) out.bags[copy.parent].children.push_back(remap[b]);
    for (NodeId v : copy.nodes) out.bag_of[v] = remap[b];
    out.bags.push_back(std::move(copy));
  }
  return out;
}

bool IsEasyBag(const CutMembershipTree& tm, int bag, std::int64_t w,
               const std::vector<std::int64_t>& degrees) {
  int high = 0;
  for (NodeId v : tm.bags.at(bag).cut) high += degrees[v] >= w;
  return high <= 1;
}

StructureReport AnalyzeStructure(const Graph& g, const PartitionTree& t, NodeId p, std::int64_t w) {
  if (t.num_nodes() != g.num_nodes()) throw std::invalid_argument("tree does not match graph");
  std::vector<std::int64_t> degrees(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) degrees[v] = g.Degree(v).base;
  const CutMembershipTree full = BuildCutMembershipTree(t, p);
  const CutMembershipTree large = WLargeSubtree(full, w);
  StructureReport r;
  r.w = w;
  r.bags = static_cast<int>(full.bags.size());
  r.large_bags = static_cast<int>(large.bags.size()) - 1;
  for (int b = 1; b < static_cast<int>(large.bags.size()); ++b) {
    if (IsEasyBag(large, b, w, degrees)) continue;
    ++r.non_easy;
    if (large.bags[b].children.empty()) {
      ++r.non_easy_leaves;
      const int size = static_cast<int>(large.bags[b].cut.size());
      if (r.smallest_non_easy_leaf < 0 || size < r.smallest_non_easy_leaf) {
        r.smallest_non_easy_leaf = size;
      }
    }
  }
  return r;
}

int CountNonEasyBags(const Graph& g, const PartitionTree& t, NodeId p, std::int64_t w) {
  return AnalyzeStructure(g, t, p, w).non_easy;
}

}  // namespace ght
