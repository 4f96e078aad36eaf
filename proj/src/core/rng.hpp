#pragma once

#include <cstdint>

namespace vaidman {

// SplitMix64 generator. Chosen over std::mt19937_64 because its output is
// fully specified by the algorithm (identical on every platform/compiler),
// which the byte-stable transcript guarantees depend on.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1) with 53 significant bits
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // uniform choice among k alternatives
  int pick(int k) { return static_cast<int>(uniform() * k); }

  int sign() { return (next() & 1) ? -1 : +1; }

 private:
  std::uint64_t state_;
};

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Independent substream for one protocol round. Deriving the stream from
// (seed, round) makes round outcomes independent of simulation order.
inline SplitMix64 round_stream(std::uint64_t seed, std::uint64_t round) {
  return SplitMix64(mix64(seed + 0x9e3779b97f4a7c15ULL * (round + 1)));
}

}  // namespace vaidman
