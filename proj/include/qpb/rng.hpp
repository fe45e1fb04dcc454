#pragma once

#include <cmath>
#include <cstdint>

namespace qpb {

// SplitMix64 finalizer (Vigna's public-domain constants).
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ull;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Role of a stream within one trial, so that e.g. the A-matrix draw and the
// B-matrix draw never alias even though they share (seed, trial).
enum class StreamPurpose : std::uint64_t {
  MatrixA = 1,
  MatrixB = 2,
  Conjugator = 3,
  StateRho = 4,
  StateSigma = 5,
  Direction = 6,
  ProbeX = 7,
  ProbeY = 8,
};

// Counter-based splittable stream: the state is derived purely from
// (seed, trial, purpose), so any trial can be replayed in isolation and
// trials may run concurrently in any order.
class SplitStream {
 public:
  SplitStream(std::uint64_t seed, std::uint64_t trial, StreamPurpose purpose)
      : SplitStream(seed, trial, static_cast<std::uint64_t>(purpose)) {}

  SplitStream(std::uint64_t seed, std::uint64_t trial, std::uint64_t purpose) {
    std::uint64_t h = mix64(seed + 0x9e3779b97f4a7c15ull);
    h = mix64(h ^ (trial + 0xd1b54a32d192ed03ull));
    h = mix64(h ^ (purpose + 0x8cb92ba72f3d8dd7ull));
    state_ = h;
  }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    return mix64(z);
  }

  // Uniform in (0,1); never returns 0, so logs are safe.
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; second value cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    double rad = std::sqrt(-2.0 * std::log(u1));
    double ang = 6.283185307179586476925286766559 * u2;
    spare_ = rad * std::sin(ang);
    has_spare_ = true;
    return rad * std::cos(ang);
  }

 private:
  std::uint64_t state_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace qpb
