#include "ght/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ght {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative node count");
  contents_.resize(n);
  for (int v = 0; v < n; ++v) contents_[v] = {v};
  contracted_.assign(n, false);
  Build(std::move(edges));
}

Graph::Graph(std::vector<std::vector<NodeId>> contents, std::vector<bool> contracted,
             std::vector<Edge> edges, std::vector<std::int64_t> self_loops)
    : n_(static_cast<int>(contents.size())),
      self_loops_(std::move(self_loops)),
      contents_(std::move(contents)),
      contracted_(std::move(contracted)) {
  if (static_cast<int>(contracted_.size()) != n_) {
    throw std::invalid_argument("contracted flags do not match node count");
  }
  if (!self_loops_.empty() && static_cast<int>(self_loops_.size()) != n_) {
    throw std::invalid_argument("self-loop counts do not match node count");
  }
  Build(std::move(edges));
}

void Graph::Build(std::vector<Edge> edges) {
  for (Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.u == e.v) throw std::invalid_argument("self-loop in edge list");
    if (e.mult < 0) throw std::invalid_argument("negative multiplicity");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  edges_.clear();
  for (const Edge& e : edges) {
    if (e.mult == 0) continue;
    if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v) {
      edges_.back().mult += e.mult;
      edges_.back().eps += e.eps;
    } else {
      edges_.push_back(e);
    }
  }

  std::vector<int> count(n_ + 1, 0);
  for (const Edge& e : edges_) {
    ++count[e.u + 1];
    ++count[e.v + 1];
  }
  std::partial_sum(count.begin(), count.end(), count.begin());
  offset_ = count;
  adj_.resize(2 * edges_.size());
  std::vector<int> fill(offset_.begin(), offset_.end() - 1);
  degree_.assign(n_, Weight());
  simple_ = true;
  perturbed_ = false;
  total_mult_ = 0;
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    const Edge& e = edges_[i];
    adj_[fill[e.u]++] = {e.v, i};
    adj_[fill[e.v]++] = {e.u, i};
    degree_[e.u] += e.weight();
    degree_[e.v] += e.weight();
    total_mult_ += e.mult;
    if (e.mult != 1) simple_ = false;
    if (e.eps != 0) perturbed_ = true;
  }
  for (int v = 0; v < static_cast<int>(self_loops_.size()); ++v) {
    if (self_loops_[v] < 0) throw std::invalid_argument("negative self-loop count");
    if (self_loops_[v] > 0) {
      simple_ = false;
      degree_[v] += Weight(self_loops_[v]);
    }
  }
  if (perturbed_) simple_ = false;
}

bool Graph::IsConnected() const {
  if (n_ <= 1) return true;
  auto labels = ComponentLabels(*this);
  return *std::max_element(labels.begin(), labels.end()) == 0;
}

Graph Graph::WithEps(const std::vector<std::int64_t>& eps) const {
  if (eps.size() != edges_.size()) throw std::invalid_argument("eps size mismatch");
  std::vector<Edge> edges = edges_;
  for (size_t i = 0; i < edges.size(); ++i) edges[i].eps = eps[i];
  return Graph(contents_, contracted_, std::move(edges), self_loops_);
}

Weight CutValue(const Graph& g, const std::vector<char>& side) {
  Weight total;
  for (const Edge& e : g.edges()) {
    if (side[e.u] != side[e.v]) total += e.weight();
  }
  return total;
}

std::vector<int> ComponentLabels(const Graph& g) {
  std::vector<int> label(g.num_nodes(), -1);
  std::vector<NodeId> stack;
  int next = 0;
  for (NodeId s = 0; s < g.num_nodes(); ++s) {
    if (label[s] != -1) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId x = stack.back();
      stack.pop_back();
      for (const Incidence& inc : g.Neighbors(x)) {
        if (label[inc.to] == -1) {
          label[inc.to] = next;
          stack.push_back(inc.to);
        }
      }
    }
    ++next;
  }
  return label;
}

Subdivision Subdivide(const Graph& g) {
  Subdivision out;
  std::vector<Edge> edges;
  NodeId next = g.num_nodes();
  for (const Edge& e : g.edges()) {
    for (std::int64_t c = 0; c < e.mult; ++c) {
      out.midpoint.push_back(next);
      out.instance_ends.emplace_back(e.u, e.v);
      edges.push_back({e.u, next, 1, 0});
      edges.push_back({next, e.v, 1, 0});
      ++next;
    }
  }
  out.graph = Graph(next, std::move(edges));
  return out;
}

InducedGraph InducedWithSelfLoops(const Graph& g, const std::vector<NodeId>& s) {
  if (s.empty()) throw std::invalid_argument("empty node set");
  std::vector<int> local(g.num_nodes(), -1);
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= g.num_nodes()) throw std::invalid_argument("node out of range");
    if (local[s[i]] != -1) throw std::invalid_argument("duplicate node in set");
    local[s[i]] = static_cast<int>(i);
  }
  std::vector<std::vector<NodeId>> contents;
  std::vector<bool> contracted;
  std::vector<std::int64_t> loops(s.size(), 0);
  for (NodeId v : s) {
    contents.push_back(g.Contents(v));
    contracted.push_back(g.IsContracted(v));
    loops[local[v]] = g.SelfLoops(v);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    int a = local[e.u], b = local[e.v];
    if (a >= 0 && b >= 0) {
      edges.push_back({a, b, e.mult, e.eps});
    } else if (a >= 0) {
      loops[a] += e.mult;
    } else if (b >= 0) {
      loops[b] += e.mult;
    }
  }
  return {Graph(std::move(contents), std::move(contracted), std::move(edges), std::move(loops)), s};
}

}  // namespace ght
