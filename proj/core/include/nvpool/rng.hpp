#pragma once

#include <cstdint>
#include <random>

namespace nvpool {

// splitmix64 step; the standard finalizer used to spread seed bits.
std::uint64_t splitmix64(std::uint64_t& state);

// Derives an independent stream seed from (master, purpose, index).
// Purpose keeps streams for different jobs of one experiment apart,
// index enumerates replications within a job.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t purpose,
                          std::uint64_t index);

// A seeded random stream. Uniforms are generated on the open interval
// (0,1) and normals by inverse-CDF transform, so every draw is a pure
// function of the engine state (no cached spare variates).
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on (0,1); never returns 0 or 1.
  double uniform01() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1p-53;
  }

  double normal01();

 private:
  std::mt19937_64 engine_;
};

}  // namespace nvpool
