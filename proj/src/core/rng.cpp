#include "core/rng.hpp"

#include <cmath>

namespace weaklab {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64_mix(seed + kGolden * (index + 1));
}

RandomStream::RandomStream(std::uint64_t seed) : seed_(seed) {
  std::uint64_t z = seed;
  for (auto& word : state_) {
    z += kGolden;
    word = splitmix64_mix(z);
  }
  if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
}

std::uint64_t RandomStream::next_u64() {
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double RandomStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::normal(double mean, double sd) {
  // 1 - u1 lies in (0, 1], keeping the log finite.
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
  const double theta = 2.0 * 3.14159265358979323846 * u2;
  return mean + sd * r * std::cos(theta);
}

bool RandomStream::bernoulli(double p) {
  return uniform() < p;
}

RandomStream RandomStream::child(std::uint64_t index) const {
  return RandomStream(derive_seed(seed_, index));
}

}  // namespace weaklab
