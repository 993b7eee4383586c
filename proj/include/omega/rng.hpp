#ifndef OMEGA_RNG_HPP
#define OMEGA_RNG_HPP

#include <cassert>
#include <cstdint>

namespace omega {

// splitmix64 (Steele, Lea & Flood 2014). The state is a counter advanced
// by a fixed odd constant and hashed on output, so any seed yields a full
// 2^64 period and jump-ahead is O(1). Fixed integer arithmetic only, so
// streams are identical across platforms; reported as "splitmix64" in
// output metadata.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Skip n draws in O(1).
  void discard(std::uint64_t n) { state_ += n * 0x9e3779b97f4a7c15ull; }

  // Uniform draw from [0, n). Rejects the wrap-around remainder of the
  // 64-bit range, so the result is unbiased for every n.
  std::uint64_t below(std::uint64_t n) {
    assert(n > 0);
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t r = (*this)();
      if (r >= threshold) {
        return r % n;
      }
    }
  }

  static constexpr const char* algorithm() { return "splitmix64"; }

 private:
  std::uint64_t state_;
};

}  // namespace omega

#endif  // OMEGA_RNG_HPP
