#include "ght/generators.hpp"

#include <random>
#include <stdexcept>

namespace ght::gen {

Graph Path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph Cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 nodes");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

Graph Complete(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(n, std::move(edges));
}

Graph Star(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, std::move(edges));
}

Graph ErdosRenyi(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges));
}

Graph TwoCliques(int k, int links) {
  if (links > k) throw std::invalid_argument("too many links");
  std::vector<Edge> edges;
  for (int side = 0; side < 2; ++side) {
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) edges.push_back({side * k + i, side * k + j});
    }
  }
  for (int i = 0; i < links; ++i) edges.push_back({i, k + i});
  return Graph(2 * k, std::move(edges));
}

Graph RandomMultigraph(int n, double p, int max_mult, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<int> mult(1, max_mult);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.push_back({i, j, mult(rng), 0});
    }
  }
  return Graph(n, std::move(edges));
}

Graph Scaled(const Graph& g, std::int64_t factor) {
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) e.mult *= factor;
  return Graph(g.num_nodes(), std::move(edges));
}

}  // namespace ght::gen
