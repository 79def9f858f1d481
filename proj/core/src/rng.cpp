#include "nvpool/rng.hpp"

#include "nvpool/stats.hpp"

namespace nvpool {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t purpose,
                          std::uint64_t index) {
  std::uint64_t state = master;
  std::uint64_t out = splitmix64(state);
  state ^= purpose * 0xff51afd7ed558ccdULL;
  out ^= splitmix64(state);
  state ^= index * 0xc4ceb9fe1a85ec53ULL;
  out ^= splitmix64(state);
  return out;
}

double RandomStream::normal01() { return normal_quantile(uniform01()); }

}  // namespace nvpool
