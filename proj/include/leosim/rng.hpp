#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>

namespace leosim {

// SplitMix64 generator. Satisfies UniformRandomBitGenerator so it can drive
// the <random> distributions.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) with 53 bits of resolution.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Independent stream families. Adding a member changes no existing stream.
enum class Stream : std::uint64_t {
  kHotspots = 1,
  kUePlacement = 2,
  kSessions = 3,
  kRachOccasion = 4,
  kHoOffset = 5,
  kAttach = 6,
  kShadowing = 7,
  kProperty = 8,
};

// Seed for one entity's stream, derived from the run seed only. Streams are
// keyed by identifiers, never by evaluation order.
std::uint64_t derive_seed(std::uint64_t master, Stream kind, std::initializer_list<std::uint64_t> ids);

inline SplitMix64 make_stream(std::uint64_t master, Stream kind, std::initializer_list<std::uint64_t> ids) {
  return SplitMix64(derive_seed(master, kind, ids));
}

}  // namespace leosim
