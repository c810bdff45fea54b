#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace gprec {

// Deterministic RNG used everywhere. Draws come from a standards-fixed
// mt19937_64 engine, and all value transforms (uniform, normal, shuffle)
// are implemented here instead of <random> distributions, whose output is
// implementation-defined. Identical seeds reproduce identical streams on
// any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t u64() { return engine_(); }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform strictly inside (0, 1); safe for log(u).
  double uniform_pos() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal();

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Derives the seed of a named substream from a root seed. All randomness in
// a run (split, parameter init, Gumbel noise, batch shuffling) flows from
// one root seed through named substreams, so components can be re-seeded
// independently and replayed.
std::uint64_t substream_seed(std::uint64_t root, std::string_view name);

inline Rng substream(std::uint64_t root, std::string_view name) {
  return Rng(substream_seed(root, name));
}

}  // namespace gprec
