#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace nvpool {

// Coalitions are bitmasks over players 0..n-1, player 0 in the least
// significant bit. The grand coalition of n players is (1u << n) - 1.
struct Coalition {
  std::uint32_t mask{0};

  Coalition() = default;
  explicit Coalition(std::uint32_t m) : mask(m) {}

  static Coalition single(int player) { return Coalition(1u << player); }
  static Coalition full(int n) { return Coalition((1u << n) - 1u); }

  int size() const { return std::popcount(mask); }
  bool empty() const { return mask == 0; }
  bool contains(int player) const { return (mask >> player) & 1u; }
  bool is_proper_of(int n) const { return mask != 0 && mask != full(n).mask; }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint32_t m = mask; m != 0; m &= m - 1)
      out.push_back(std::countr_zero(m));
    return out;
  }

  friend bool operator==(const Coalition&, const Coalition&) = default;
};

inline std::uint32_t full_mask(int n) {
  if (n < 1 || n > 31) throw std::domain_error("player count out of range");
  return (1u << n) - 1u;
}

// Sums x over the members of every coalition mask in one sweep.
// out[mask] = sum_{i in mask} x[i]; out[0] = 0.
inline void coalition_sums(const std::vector<double>& x, std::vector<double>& out) {
  const int n = static_cast<int>(x.size());
  const std::uint32_t full = full_mask(n);
  out.assign(full + 1, 0.0);
  for (std::uint32_t m = 1; m <= full; ++m) {
    const std::uint32_t low = m & (m - 1);  // m without its lowest set bit
    out[m] = out[low] + x[static_cast<std::size_t>(std::countr_zero(m))];
  }
}

}  // namespace nvpool
