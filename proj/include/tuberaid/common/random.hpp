#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>

namespace tuberaid {

// splitmix64 finalizer; used to derive independent per-item seeds.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream) noexcept;

// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes) noexcept;

// Seeded generator whose every derived quantity is computed here rather than
// through <random> distributions, which are implementation-defined. The same
// seed yields the same stream on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform(); // [0, 1)
  std::size_t below(std::size_t n); // uniform in [0, n); n > 0
  std::int64_t between(std::int64_t lo, std::int64_t hi); // inclusive
  double uniform(double lo, double hi);
  double normal();
  std::int64_t poisson(double mean);
  bool bernoulli(double p) { return uniform() < p; }

  // Index drawn proportionally to cumulative weights (non-decreasing, last > 0).
  std::size_t weighted(std::span<const double> cumulative);

  template <typename T> void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

private:
  std::mt19937_64 engine_;
};

} // namespace tuberaid
