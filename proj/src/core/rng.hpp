#pragma once

#include <cstdint>

namespace weaklab {

// splitmix64 finalizer (Steele et al.), used both for seeding and as the
// documented child-seed hash:
//
//   derive_seed(seed, index) = splitmix64_mix(seed + 0x9E3779B97F4A7C15 * (index + 1))
//
// Child streams and sweep points use this fixed formula so the seed
// structure of a run is reproducible from the master seed alone.
std::uint64_t splitmix64_mix(std::uint64_t z);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// xoshiro256** seeded through splitmix64. Uniform and normal variates are
// produced with fixed arithmetic on the raw 64-bit stream, so a given seed
// replays byte-identically; nothing is delegated to std:: distributions.
//
// Streams are cheap values. child(i) derives an independent stream from the
// construction seed (not from the current state), so the draw order of the
// parent never shifts the children.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  std::uint64_t next_u64();
  double uniform();                        // [0, 1), 53-bit resolution
  double normal(double mean, double sd);   // Box-Muller, two uniforms per draw
  bool bernoulli(double p);                // uniform() < p

  std::uint64_t seed() const { return seed_; }
  RandomStream child(std::uint64_t index) const;

 private:
  std::uint64_t state_[4];
  std::uint64_t seed_;
};

}  // namespace weaklab
