#include "ght/partition_tree.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ght/graph_io.hpp"

namespace ght {

PartitionTree::PartitionTree(int n) : n_(n), super_of_(n, 0) {
  if (n < 0) throw std::invalid_argument("negative node count");
  std::vector<NodeId> all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  supers_.push_back(std::move(all));
  incident_.emplace_back();
}

PartitionTree::PartitionTree(int n, std::vector<std::vector<NodeId>> supers,
                             std::vector<TreeEdge> edges)
    : n_(n), supers_(std::move(supers)), super_of_(n, -1), edges_(std::move(edges)) {
  for (int i = 0; i < num_super(); ++i) {
    if (supers_[i].empty()) throw std::invalid_argument("empty super-node");
    for (NodeId v : supers_[i]) {
      if (v < 0 || v >= n) throw std::invalid_argument("node out of range");
      if (super_of_[v] != -1) throw std::invalid_argument("super-nodes overlap");
      super_of_[v] = i;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (super_of_[v] == -1) throw std::invalid_argument("super-nodes do not cover all nodes");
  }
  if (static_cast<int>(edges_.size()) != std::max(num_super() - 1, 0)) {
    throw std::invalid_argument("tree must have one edge fewer than super-nodes");
  }
  incident_.resize(num_super());
  std::vector<int> parent(num_super());
  for (int i = 0; i < num_super(); ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    const TreeEdge& te = edges_[e];
    if (te.a < 0 || te.b < 0 || te.a >= num_super() || te.b >= num_super() || te.a == te.b) {
      throw std::invalid_argument("bad tree edge");
    }
    int ra = find(te.a), rb = find(te.b);
    if (ra == rb) throw std::invalid_argument("tree edges contain a cycle");
    parent[ra] = rb;
    incident_[te.a].push_back(e);
    incident_[te.b].push_back(e);
  }
}

const std::vector<NodeId>& PartitionTree::Members(int i) const {
  if (i < 0 || i >= num_super()) throw std::out_of_range("unknown super-node");
  return supers_[i];
}

std::vector<char> PartitionTree::ComponentNodes(int i, int from) const {
  std::vector<char> in(n_, 0);
  std::vector<char> seen(num_super(), 0);
  std::vector<int> stack{from};
  seen[i] = seen[from] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (NodeId v : supers_[x]) in[v] = 1;
    for (int e : incident_[x]) {
      int y = OtherEnd(e, x);
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return in;
}

int PartitionTree::Refine(int i, const std::vector<char>& side, Weight value) {
  if (i < 0 || i >= num_super()) throw std::out_of_range("unknown super-node");
  if (static_cast<int>(side.size()) != n_) throw std::invalid_argument("side size mismatch");
  std::vector<NodeId> inside, outside;
  for (NodeId v : supers_[i]) (side[v] ? inside : outside).push_back(v);
  if (inside.empty() || outside.empty()) {
    throw std::invalid_argument("cut does not split the super-node");
  }
  // Label every other super-node by the neighbouring component it sits in,
  // then decide each component before mutating anything.
  std::vector<int> comp_of(num_super(), -1);
  const int degree = static_cast<int>(incident_[i].size());
  for (int k = 0; k < degree; ++k) {
    int j = OtherEnd(incident_[i][k], i);
    std::vector<int> stack{j};
    comp_of[j] = k;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int e : incident_[x]) {
        int y = OtherEnd(e, x);
        if (y != i && comp_of[y] == -1) {
          comp_of[y] = k;
          stack.push_back(y);
        }
      }
    }
  }
  std::vector<int> in_count(degree, 0), total(degree, 0);
  for (NodeId v = 0; v < n_; ++v) {
    int k = super_of_[v] == i ? -1 : comp_of[super_of_[v]];
    if (k < 0) continue;
    ++total[k];
    in_count[k] += side[v] != 0;
  }
  std::vector<std::pair<int, bool>> moves;
  for (int k = 0; k < degree; ++k) {
    if (in_count[k] != 0 && in_count[k] != total[k]) {
      throw std::invalid_argument("cut crosses a contracted component");
    }
    moves.emplace_back(incident_[i][k], in_count[k] == total[k]);
  }
  const int fresh = num_super();
  supers_[i] = std::move(outside);
  for (NodeId v : inside) super_of_[v] = fresh;
  supers_.push_back(std::move(inside));
  incident_.emplace_back();
  std::vector<int> keep;
  for (auto [e, to_fresh] : moves) {
    if (to_fresh) {
      if (edges_[e].a == i) edges_[e].a = fresh; else edges_[e].b = fresh;
      incident_[fresh].push_back(e);
    } else {
      keep.push_back(e);
    }
  }
  incident_[i] = std::move(keep);
  edges_.push_back({i, fresh, value});
  const int id = static_cast<int>(edges_.size()) - 1;
  incident_[i].push_back(id);
  incident_[fresh].push_back(id);
  return fresh;
}

std::vector<TreeEdge> PartitionTree::NodeEdges() const {
  if (!IsFull()) throw std::invalid_argument("tree is not fully resolved");
  std::vector<TreeEdge> out;
  for (const TreeEdge& e : edges_) {
    NodeId u = supers_[e.a][0], v = supers_[e.b][0];
    out.push_back({std::min(u, v), std::max(u, v), e.w});
  }
  std::sort(out.begin(), out.end(), [](const TreeEdge& x, const TreeEdge& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  });
  return out;
}

namespace {

struct NodeAdj {
  std::vector<std::vector<std::pair<NodeId, int>>> adj;  // (neighbor, edge id)
  std::vector<TreeEdge> edges;
};

NodeAdj MakeNodeAdj(const PartitionTree& t) {
  NodeAdj out;
  out.edges = t.NodeEdges();
  out.adj.resize(t.num_nodes());
  for (int e = 0; e < static_cast<int>(out.edges.size()); ++e) {
    out.adj[out.edges[e].a].push_back({out.edges[e].b, e});
    out.adj[out.edges[e].b].push_back({out.edges[e].a, e});
  }
  return out;
}

}  // namespace

TreeQueryResult TreeQuery(const PartitionTree& t, NodeId u, NodeId v) {
  const int n = t.num_nodes();
  if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("node out of range");
  if (u == v) throw std::invalid_argument("query nodes must differ");
  NodeAdj na = MakeNodeAdj(t);
  std::vector<int> parent_edge(n, -2);
  std::vector<NodeId> parent(n, -1);
  std::vector<NodeId> stack{u};
  parent_edge[u] = -1;
  while (!stack.empty()) {
    NodeId x = stack.back();
    stack.pop_back();
    for (auto [y, e] : na.adj[x]) {
      if (parent_edge[y] == -2) {
        parent_edge[y] = e;
        parent[y] = x;
        stack.push_back(y);
      }
    }
  }
  int best = -1;
  NodeId below = -1;
  for (NodeId x = v; x != u; x = parent[x]) {
    int e = parent_edge[x];
    if (best == -1 || na.edges[e].w < na.edges[best].w) {
      best = e;
      below = x;
    }
  }
  TreeQueryResult r;
  r.value = na.edges[best].w;
  r.a = parent[below];
  r.b = below;
  // u's component: everything not in the subtree hanging below `below`.
  r.side.side.assign(n, 1);
  std::vector<NodeId> sub{below};
  r.side.side[below] = 0;
  while (!sub.empty()) {
    NodeId x = sub.back();
    sub.pop_back();
    for (auto [y, e] : na.adj[x]) {
      if (y != parent[x] && r.side.side[y]) {
        r.side.side[y] = 0;
        sub.push_back(y);
      }
    }
  }
  r.side.value = r.value;
  r.side.s = u;
  r.side.t = v;
  return r;
}

std::vector<std::vector<Weight>> AllPairsTreeValues(const PartitionTree& t) {
  const int n = t.num_nodes();
  NodeAdj na = MakeNodeAdj(t);
  std::vector<std::vector<Weight>> out(n, std::vector<Weight>(n));
  std::vector<std::pair<NodeId, NodeId>> stack;
  for (NodeId s = 0; s < n; ++s) {
    std::vector<char> seen(n, 0);
    seen[s] = 1;
    stack.assign(1, {s, -1});
    out[s][s] = Weight::Infinite();
    while (!stack.empty()) {
      auto [x, _] = stack.back();
      stack.pop_back();
      for (auto [y, e] : na.adj[x]) {
        if (seen[y]) continue;
        seen[y] = 1;
        out[s][y] = x == s ? na.edges[e].w : Min(out[s][x], na.edges[e].w);
        stack.push_back({y, x});
      }
    }
  }
  return out;
}

void WriteTree(std::ostream& out, const PartitionTree& t) {
  out << "t " << t.num_nodes() << '\n';
  for (const TreeEdge& e : t.NodeEdges()) {
    out << "e " << e.a + 1 << ' ' << e.b + 1 << ' ' << e.w.ToString() << '\n';
  }
}

std::string TreeToString(const PartitionTree& t) {
  std::ostringstream os;
  WriteTree(os, t);
  return os.str();
}

PartitionTree ReadTree(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1;
  std::vector<TreeEdge> edges;
  auto fail = [&](const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == 'c' || tag[0] == '#') continue;
    if (tag == "t") {
      if (n >= 0) fail("duplicate header");
      if (!(ls >> n) || n < 0) fail("malformed header");
    } else if (tag == "e") {
      if (n < 0) fail("edge before header");
      long long u, v;
      std::string w;
      if (!(ls >> u >> v >> w)) fail("malformed edge");
      if (u < 1 || v < 1 || u > n || v > n || u == v) fail("bad endpoints");
      auto dot = w.find('.');
      Weight weight;
      try {
        if (dot == std::string::npos) {
          weight = Weight(std::stoll(w));
        } else {
          weight = Weight(std::stoll(w.substr(0, dot)), std::stoll(w.substr(dot + 1)));
        }
      } catch (const std::exception&) {
        fail("malformed weight");
      }
      edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1), weight});
    } else {
      fail("unknown record '" + tag + "'");
    }
  }
  if (n < 0) throw ParseError("missing header");
  std::vector<std::vector<NodeId>> supers(n);
  for (int v = 0; v < n; ++v) supers[v] = {v};
  try {
    return PartitionTree(static_cast<int>(n), std::move(supers), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid tree: ") + e.what());
  }
}

PartitionTree ReadTreeFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return ReadTree(in);
}

void WriteTreeFile(const std::string& path, const PartitionTree& t) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  WriteTree(out, t);
}

PartitionTree RoundWeights(const PartitionTree& t) {
  std::vector<std::vector<NodeId>> supers;
  for (int i = 0; i < t.num_super(); ++i) supers.push_back(t.Members(i));
  std::vector<TreeEdge> edges = t.edges();
  for (TreeEdge& e : edges) e.w = Weight(e.w.base);
  return PartitionTree(t.num_nodes(), std::move(supers), std::move(edges));
}

}  // namespace ght
