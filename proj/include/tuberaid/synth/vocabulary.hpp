#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tuberaid/common/random.hpp"

namespace tuberaid::synth {

// Terms with sampling weights.
class WeightedVocabulary {
public:
  WeightedVocabulary() = default;
  WeightedVocabulary(std::vector<std::string> terms, std::span<const double> weights);

  const std::string &sample(Rng &rng) const;

  const std::vector<std::string> &terms() const noexcept { return terms_; }
  double weight(std::size_t i) const;
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

private:
  std::vector<std::string> terms_;
  std::vector<double> cumulative_;
};

// 1 / (rank + 1)^exponent for ranks 0..n-1.
std::vector<double> zipf_weights(std::size_t n, double exponent = 1.0);

// Pronounceable placeholder words built from syllables. Every word the
// factory returns survives tokenization as a single token, and no two share
// a stem, so ground truth stays unambiguous after stemming.
class WordFactory {
public:
  explicit WordFactory(std::uint64_t seed) : rng_(seed) {}

  std::string next();
  std::vector<std::string> take(std::size_t n);
  // Keeps generated words from sharing a stem with `word`.
  void reserve(std::string_view word);

private:
  Rng rng_;
  std::set<std::string> stems_;
};

} // namespace tuberaid::synth
