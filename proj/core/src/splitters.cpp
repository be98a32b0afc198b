#include "ght/splitters.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ght {

namespace {

bool IsPrime(int q) {
  if (q < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

// Largest e with P^e <= x.
int FloorLog(long long x, long long p) {
  int e = 0;
  long long acc = 1;
  while (acc <= x / p) {
    acc *= p;
    ++e;
  }
  return e;
}

std::vector<int> PrimesFrom(int start, int count) {
  std::vector<int> out;
  for (int q = std::max(start, 2); static_cast<int>(out.size()) < count; ++q) {
    if (IsPrime(q)) out.push_back(q);
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> Splitters(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("splitters need n >= 1 and k >= 1");
  k = std::min(k, n);
  std::vector<std::vector<int>> family;
  if (k == 1) {
    family.emplace_back(n);
    std::iota(family.back().begin(), family.back().end(), 0);
    return family;
  }
  long long best_size = n;
  std::vector<int> best_primes;
  for (int start = 2; start <= n; start = start < 16 ? start + 1 : start * 2) {
    const int need = (k - 1) * FloorLog(n - 1, start) + 1;
    std::vector<int> primes = PrimesFrom(start, need);
    long long size = 0;
    for (int q : primes) size += std::min(q, n);
    if (size < best_size) {
      best_size = size;
      best_primes = std::move(primes);
    }
  }
  if (best_primes.empty()) {
    for (int x = 0; x < n; ++x) family.push_back({x});
    return family;
  }
  std::set<std::vector<int>> seen;
  for (int q : best_primes) {
    for (int r = 0; r < std::min(q, n); ++r) {
      std::vector<int> set;
      for (int x = r; x < n; x += q) set.push_back(x);
      if (seen.insert(set).second) family.push_back(std::move(set));
    }
  }
  return family;
}

bool IsSplitterFamily(const std::vector<std::vector<int>>& family, int n, int k) {
  if (n > 30) throw std::invalid_argument("exhaustive splitter check limited to n <= 30");
  std::vector<std::uint32_t> masks;
  for (const auto& set : family) {
    std::uint32_t m = 0;
    for (int x : set) m |= std::uint32_t{1} << x;
    masks.push_back(m);
  }
  // For each j it suffices to check every T - {j} of size exactly
  // min(k, n) - 1, since isolation from a superset implies isolation.
  const int rest = std::min(k, n) - 1;
  for (int j = 0; j < n; ++j) {
    std::vector<int> pool;
    for (int x = 0; x < n; ++x) {
      if (x != j) pool.push_back(x);
    }
    std::vector<int> pick(rest);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::uint32_t others = 0;
      for (int i : pick) others |= std::uint32_t{1} << pool[i];
      bool ok = false;
      for (std::uint32_t m : masks) {
        if ((m >> j & 1) && (m & others) == 0) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
      int i = rest - 1;
      while (i >= 0 && pick[i] == static_cast<int>(pool.size()) - rest + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int t = i + 1; t < rest; ++t) pick[t] = pick[t - 1] + 1;
    }
  }
  return true;
}

}  // namespace ght
