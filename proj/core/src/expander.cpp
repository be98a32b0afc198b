#include "ght/expander.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace ght {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Single connected component carrying all positive demand.
struct Component {
  std::vector<NodeId> nodes;
  std::vector<int> local;  // graph node -> index in nodes, or -1
  std::vector<std::vector<std::pair<int, double>>> adj;
  std::vector<double> degree;
  std::vector<double> demand;
  double total_demand = 0;
};

Component MakeComponent(const Graph& g, const Demand& d, const std::vector<NodeId>& nodes) {
  Component c;
  c.nodes = nodes;
  c.local.assign(g.num_nodes(), -1);
  for (size_t i = 0; i < nodes.size(); ++i) c.local[nodes[i]] = static_cast<int>(i);
  c.adj.resize(nodes.size());
  c.degree.assign(nodes.size(), 0);
  c.demand.resize(nodes.size());
  for (size_t i = 0; i < nodes.size(); ++i) {
    c.demand[i] = static_cast<double>(d[nodes[i]]);
    c.total_demand += c.demand[i];
    for (const Incidence& inc : g.Neighbors(nodes[i])) {
      int j = c.local[inc.to];
      if (j < 0) continue;
      double w = static_cast<double>(g.edge(inc.edge).mult);
      c.adj[i].push_back({j, w});
      c.degree[i] += w;
    }
  }
  return c;
}

struct SweepResult {
  double ratio = kInf;
  std::vector<char> side;  // over component indices
};

SweepResult Sweep(const Component& c, const std::vector<double>& x) {
  const int k = static_cast<int>(c.nodes.size());
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return x[a] < x[b]; });
  std::vector<double> to_s(k, 0);
  double delta = 0, ds = 0;
  double best = kInf;
  int best_prefix = -1;
  for (int i = 0; i + 1 < k; ++i) {
    int u = order[i];
    delta += c.degree[u] - 2 * to_s[u];
    for (auto [y, w] : c.adj[u]) to_s[y] += w;
    ds += c.demand[u];
    double m = std::min(ds, c.total_demand - ds);
    if (m <= 0) continue;
    double r = delta / m;
    if (r < best) {
      best = r;
      best_prefix = i;
    }
  }
  SweepResult out;
  out.ratio = best;
  out.side.assign(k, 0);
  for (int i = 0; i <= best_prefix; ++i) out.side[order[i]] = 1;
  return out;
}

struct Spectral {
  std::vector<double> fiedler;
  bool certified = false;
};

// Dense generalized eigenproblem L x = lambda D x with zero-demand nodes
// eliminated by a Schur complement. For every side S,
// delta(S) >= lambda_2 * d(S) d(V-S) / d(V) >= lambda_2/2 * min(d(S), d(V-S)).
Spectral DenseSpectral(const Component& c, double phi) {
  const int k = static_cast<int>(c.nodes.size());
  std::vector<int> pos, zero;
  for (int i = 0; i < k; ++i) (c.demand[i] > 0 ? pos : zero).push_back(i);
  Spectral out;
  out.fiedler.assign(k, 0);
  if (pos.size() < 2) {
    out.certified = true;
    return out;
  }
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(k, k);
  for (int i = 0; i < k; ++i) {
    lap(i, i) = c.degree[i];
    for (auto [j, w] : c.adj[i]) lap(i, j) -= w;
  }
  const int np = static_cast<int>(pos.size()), nz = static_cast<int>(zero.size());
  Eigen::MatrixXd lpp(np, np), lpz(np, nz), lzz(nz, nz);
  for (int a = 0; a < np; ++a) {
    for (int b = 0; b < np; ++b) lpp(a, b) = lap(pos[a], pos[b]);
    for (int b = 0; b < nz; ++b) lpz(a, b) = lap(pos[a], zero[b]);
  }
  for (int a = 0; a < nz; ++a) {
    for (int b = 0; b < nz; ++b) lzz(a, b) = lap(zero[a], zero[b]);
  }
  Eigen::LDLT<Eigen::MatrixXd> lzz_solver;
  Eigen::MatrixXd reduced = lpp;
  if (nz > 0) {
    lzz_solver.compute(lzz);
    reduced -= lpz * lzz_solver.solve(lpz.transpose());
  }
  Eigen::VectorXd inv_sqrt(np);
  for (int a = 0; a < np; ++a) inv_sqrt(a) = 1.0 / std::sqrt(c.demand[pos[a]]);
  Eigen::MatrixXd m = inv_sqrt.asDiagonal() * reduced * inv_sqrt.asDiagonal();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m);
  const double lambda2 = eig.eigenvalues()(1);
  out.certified = lambda2 / 2 >= phi * (1 + 1e-9) + 1e-9;
  Eigen::VectorXd xp = inv_sqrt.asDiagonal() * eig.eigenvectors().col(1);
  for (int a = 0; a < np; ++a) out.fiedler[pos[a]] = xp(a);
  if (nz > 0) {
    Eigen::VectorXd xz = -lzz_solver.solve(lpz.transpose() * xp);
    for (int b = 0; b < nz; ++b) out.fiedler[zero[b]] = xz(b);
  }
  return out;
}

// Approximate Fiedler vector by power iteration with slightly regularised
// demands. Used only to find sparse sweep cuts.
std::vector<double> PowerFiedler(const Component& c, int iterations) {
  const int k = static_cast<int>(c.nodes.size());
  std::vector<double> dr(k), sq(k);
  double shift = 0;
  for (int i = 0; i < k; ++i) {
    dr[i] = c.demand[i] + 1e-2 * (c.degree[i] + 1);
    sq[i] = std::sqrt(dr[i]);
    shift = std::max(shift, 2 * c.degree[i] / dr[i]);
  }
  double norm0 = 0;
  for (int i = 0; i < k; ++i) norm0 += dr[i];
  std::vector<double> trivial(k);
  for (int i = 0; i < k; ++i) trivial[i] = sq[i] / std::sqrt(norm0);
  std::mt19937_64 rng(12345);
  std::normal_distribution<double> normal;
  std::vector<double> y(k), next(k);
  for (double& v : y) v = normal(rng);
  auto deflate_normalize = [&](std::vector<double>& v) {
    double dot = 0;
    for (int i = 0; i < k; ++i) dot += v[i] * trivial[i];
    double nn = 0;
    for (int i = 0; i < k; ++i) {
      v[i] -= dot * trivial[i];
      nn += v[i] * v[i];
    }
    nn = std::sqrt(nn);
    if (nn > 0) {
      for (double& t : v) t /= nn;
    }
  };
  deflate_normalize(y);
  for (int it = 0; it < iterations; ++it) {
    // next = (shift I - D^-1/2 L D^-1/2) y
    for (int i = 0; i < k; ++i) {
      double lx = c.degree[i] * y[i] / sq[i];
      for (auto [j, w] : c.adj[i]) lx -= w * y[j] / sq[j];
      next[i] = shift * y[i] - lx / sq[i];
    }
    y.swap(next);
    deflate_normalize(y);
  }
  for (int i = 0; i < k; ++i) y[i] /= sq[i];
  return y;
}

struct Exact {
  bool ok = true;
  double ratio = kInf;
  std::vector<char> side;
};

Exact Enumerate(const Component& c, double phi) {
  const int k = static_cast<int>(c.nodes.size());
  Exact out;
  out.side.assign(k, 0);
  if (k < 2) return out;
  std::vector<double> to_s(k, 0);
  std::vector<char> in(k, 0);
  double delta = 0, ds = 0;
  std::uint32_t mask = 0, best_mask = 0;
  const std::uint64_t total = std::uint64_t{1} << (k - 1);
  for (std::uint64_t i = 1; i < total; ++i) {
    const int u = std::countr_zero(i) + 1;
    if (!in[u]) {
      delta += c.degree[u] - 2 * to_s[u];
      for (auto [y, w] : c.adj[u]) to_s[y] += w;
      ds += c.demand[u];
    } else {
      delta -= c.degree[u] - 2 * to_s[u];
      for (auto [y, w] : c.adj[u]) to_s[y] -= w;
      ds -= c.demand[u];
    }
    in[u] ^= 1;
    mask ^= std::uint32_t{1} << u;
    double m = std::min(ds, c.total_demand - ds);
    if (m <= 0) continue;
    double r = delta / m;
    if (r < out.ratio) {
      out.ratio = r;
      best_mask = mask;
    }
  }
  out.ok = !(out.ratio < phi);
  for (int u = 0; u < k; ++u) out.side[u] = (best_mask >> u) & 1;
  return out;
}

std::vector<char> Lift(const Component& c, const std::vector<char>& local, int n) {
  std::vector<char> side(n, 0);
  for (size_t i = 0; i < c.nodes.size(); ++i) side[c.nodes[i]] = local[i];
  return side;
}

}  // namespace

double DemandConductance(const Graph& g, const Demand& d, const std::vector<char>& side) {
  double delta = 0, ds = 0, total = 0;
  for (const Edge& e : g.edges()) {
    if (side[e.u] != side[e.v]) delta += static_cast<double>(e.mult);
  }
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    total += static_cast<double>(d[v]);
    if (side[v]) ds += static_cast<double>(d[v]);
  }
  double m = std::min(ds, total - ds);
  return m <= 0 ? kInf : delta / m;
}

ExpansionCheck CheckExpansion(const Graph& g, const Demand& d, double phi,
                              const DecompositionConfig& config) {
  const int n = g.num_nodes();
  if (static_cast<int>(d.size()) != n) throw std::invalid_argument("demand size mismatch");
  for (auto x : d) {
    if (x < 0) throw std::invalid_argument("negative demand");
  }
  ExpansionCheck out;
  if (n <= 1) {
    out.status = Expansion::kCertified;
    return out;
  }
  std::vector<int> label = ComponentLabels(g);
  const int comps = *std::max_element(label.begin(), label.end()) + 1;
  std::vector<char> positive(comps, 0);
  for (NodeId v = 0; v < n; ++v) {
    if (d[v] > 0) positive[label[v]] = 1;
  }
  std::vector<int> pos_comps;
  for (int k = 0; k < comps; ++k) {
    if (positive[k]) pos_comps.push_back(k);
  }
  if (pos_comps.empty()) {
    out.status = Expansion::kCertified;
    return out;
  }
  if (pos_comps.size() > 1) {
    out.status = Expansion::kViolated;
    out.cut.assign(n, 0);
    for (NodeId v = 0; v < n; ++v) out.cut[v] = label[v] == pos_comps[0];
    out.ratio = 0;
    return out;
  }
  // Nodes outside the positive component never lower the conductance.
  std::vector<NodeId> nodes;
  for (NodeId v = 0; v < n; ++v) {
    if (label[v] == pos_comps[0]) nodes.push_back(v);
  }
  Component c = MakeComponent(g, d, nodes);
  const int k = static_cast<int>(nodes.size());

  bool certified = false;
  std::vector<double> vec;
  if (k <= config.spectral_limit) {
    Spectral sp = DenseSpectral(c, phi);
    certified = sp.certified;
    vec = std::move(sp.fiedler);
  } else {
    vec = PowerFiedler(c, config.power_iterations);
  }
  SweepResult sw = Sweep(c, vec);
  if (sw.ratio < phi) {
    out.status = Expansion::kViolated;
    out.cut = Lift(c, sw.side, n);
    out.ratio = sw.ratio;
    return out;
  }
  if (certified) {
    out.status = Expansion::kCertified;
    return out;
  }
  if (k <= std::min(config.exact_limit, 30)) {
    Exact ex = Enumerate(c, phi);
    out.status = ex.ok ? Expansion::kCertified : Expansion::kViolated;
    if (!ex.ok) {
      out.cut = Lift(c, ex.side, n);
      out.ratio = ex.ratio;
    }
    return out;
  }
  out.status = Expansion::kUnknown;
  return out;
}

bool VerifyExpansion(const Graph& g, const Demand& d, double phi, int limit) {
  DecompositionConfig config;
  config.exact_limit = limit;
  if (g.num_nodes() <= limit) {
    // Exhaustive regardless of any spectral shortcut.
    config.spectral_limit = 0;
    config.power_iterations = 0;
  }
  return CheckExpansion(g, d, phi, config).status == Expansion::kCertified;
}

int SizeG(const Graph& g, const std::vector<NodeId>& nodes) {
  int total = 0;
  for (NodeId v : nodes) total += g.SizeG(v);
  return total;
}

Decomposition DecomposeWithDemands(const Graph& g, const Demand& d, double phi,
                                   const DecompositionConfig& config) {
  const int n = g.num_nodes();
  if (static_cast<int>(d.size()) != n) throw std::invalid_argument("demand size mismatch");
  for (auto x : d) {
    if (x < 0) throw std::invalid_argument("negative demand");
  }
  if (!(phi > 0 && phi <= 1)) throw std::invalid_argument("phi must lie in (0, 1]");
  Decomposition out;
  std::vector<int> part_of(n, -1);
  std::vector<std::vector<NodeId>> stack;
  if (n > 0) {
    stack.emplace_back(n);
    std::iota(stack.back().begin(), stack.back().end(), 0);
  }
  std::vector<char> in_x(n, 0);
  while (!stack.empty()) {
    std::vector<NodeId> x = std::move(stack.back());
    stack.pop_back();
    for (NodeId v : x) in_x[v] = 1;
    Demand dx(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
      std::int64_t boundary = 0;
      for (const Incidence& inc : g.Neighbors(x[i])) {
        if (!in_x[inc.to]) boundary += g.edge(inc.edge).mult;
      }
      dx[i] = d[x[i]] + boundary;
    }
    InducedGraph sub = InducedWithSelfLoops(g, x);
    for (NodeId v : x) in_x[v] = 0;
    ExpansionCheck check = x.size() == 1 ? ExpansionCheck{Expansion::kCertified, {}, 0}
                                         : CheckExpansion(sub.graph, dx, phi, config);
    if (check.status == Expansion::kViolated) {
      std::vector<NodeId> a, b;
      for (size_t i = 0; i < x.size(); ++i) (check.cut[i] ? a : b).push_back(x[i]);
      stack.push_back(std::move(b));
      stack.push_back(std::move(a));
      continue;
    }
    ExpanderPart part;
    part.certified = check.status == Expansion::kCertified;
    part.size_g = SizeG(g, x);
    part.demand = std::move(dx);
    for (NodeId v : x) part_of[v] = static_cast<int>(out.parts.size());
    part.nodes = std::move(x);
    out.certified_parts += part.certified;
    out.parts.push_back(std::move(part));
  }
  double total_demand = 0;
  for (auto x : d) total_demand += static_cast<double>(x);
  for (const Edge& e : g.edges()) {
    if (part_of[e.u] != part_of[e.v]) out.boundary_weight += e.mult;
  }
  out.b_factor = total_demand > 0 ? out.boundary_weight / (phi * total_demand) : 0;
  return out;
}

}  // namespace ght
