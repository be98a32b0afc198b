#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace ght {

// Exact edge and cut weight. The integer part is `base`; `eps` counts
// perturbation units, each of which is smaller than any achievable
// difference in `base`. Ordering is lexicographic.
struct Weight {
  std::int64_t base = 0;
  std::int64_t eps = 0;

  constexpr Weight() = default;
  constexpr Weight(std::int64_t b) : base(b) {}  // NOLINT(google-explicit-constructor)
  constexpr Weight(std::int64_t b, std::int64_t e) : base(b), eps(e) {}

  constexpr auto operator<=>(const Weight&) const = default;

  constexpr Weight& operator+=(const Weight& o) {
    base += o.base;
    eps += o.eps;
    return *this;
  }
  constexpr Weight& operator-=(const Weight& o) {
    base -= o.base;
    eps -= o.eps;
    return *this;
  }
  friend constexpr Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend constexpr Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend constexpr Weight operator*(Weight a, std::int64_t k) {
    return Weight(a.base * k, a.eps * k);
  }

  constexpr bool IsZero() const { return base == 0 && eps == 0; }
  constexpr bool IsPositive() const { return base > 0 || (base == 0 && eps > 0); }

  static constexpr Weight Infinite() { return Weight(std::int64_t{1} << 52, 0); }

  std::string ToString() const { return std::to_string(base) + "." + std::to_string(eps); }
};

inline std::ostream& operator<<(std::ostream& os, const Weight& w) {
  return os << w.ToString();
}

constexpr Weight Min(const Weight& a, const Weight& b) { return b < a ? b : a; }

}  // namespace ght
