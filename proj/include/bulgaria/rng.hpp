#pragma once

#include <cstdint>

namespace bulgaria {

/// Counter-based 64-bit generator (splitmix64): the state is a Weyl
/// counter and every output is a finalizer hash of it. Cheap to seed,
/// cheap to fork into per-trial streams, portable output sequence.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next_u64() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double next_double() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

/// seed ^ hash(stream): distinct streams stay decorrelated for any fixed
/// master seed, and ensemble results do not depend on execution order.
std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::uint64_t stream) noexcept;

/// Exact Binomial(count, p) variate: inversion when count * min(p, 1-p)
/// is small, transformed rejection (BTRS) otherwise. Both draw from the
/// exact distribution, so the switch point does not affect the law.
std::uint64_t binomial_sample(std::uint64_t count, double p, Rng& rng);

}  // namespace bulgaria
