#pragma once

#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "tuberaid/attribution/dataset.hpp"
#include "tuberaid/common/random.hpp"

namespace tuberaid::attribution {

struct TreeParams {
  std::size_t max_depth = 0;    // 0 = unlimited
  std::size_t max_features = 0; // candidate features per split; 0 = all
  std::size_t min_samples_split = 2;
};

// CART classification tree with Gini impurity. Stored flat; node 0 is the root.
class DecisionTree {
public:
  struct Node {
    int feature = -1; // -1 marks a leaf
    double threshold = 0.0;
    int left = -1; // x[feature] <= threshold
    int right = -1;
    std::size_t label = 0;
  };

  // `samples` may repeat indices (bootstrap).
  static DecisionTree fit(const Dataset &data, std::span<const std::size_t> samples,
                          const TreeParams &params, Rng &rng);

  std::size_t predict(std::span<const double> x) const;
  const std::vector<Node> &nodes() const noexcept { return nodes_; }
  std::size_t depth() const;

  nlohmann::json to_json() const;
  static DecisionTree from_json(const nlohmann::json &j);

private:
  std::vector<Node> nodes_;
};

} // namespace tuberaid::attribution
