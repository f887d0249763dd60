#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "tuberaid/attribution/dataset.hpp"
#include "tuberaid/attribution/tree.hpp"

namespace tuberaid::attribution {

enum class Algorithm { random_forest, decision_tree, knn, linear_svm };

std::string_view to_string(Algorithm a) noexcept;
std::string_view display_name(Algorithm a) noexcept; // "Random Forest"
Algorithm algorithm_from_string(std::string_view name);

struct ClassifierConfig {
  Algorithm algorithm = Algorithm::random_forest;
  // trees
  std::size_t n_trees = 100;
  std::size_t max_depth = 0;    // 0 = unlimited
  std::size_t max_features = 0; // 0 = sqrt(dimension) for forests, all for a single tree
  std::size_t min_samples_split = 2;
  bool bootstrap = true;
  // knn
  std::size_t knn_k = 5;
  // linear svm
  double svm_lambda = 1e-4;
  std::size_t svm_epochs = 100;

  std::uint64_t seed = 0;
  std::size_t jobs = 1;

  nlohmann::json to_json() const;
  static ClassifierConfig from_json(const nlohmann::json &j);
};

// A trained classifier. Training canonicalizes the sample order first, so
// the result depends on the data set, the configuration and the seed only.
class ClassifierModel {
public:
  static ClassifierModel train(const Dataset &data, const ClassifierConfig &config);

  std::size_t predict_index(std::span<const double> x) const;
  const std::string &predict(std::span<const double> x) const;

  Algorithm algorithm() const noexcept { return config_.algorithm; }
  const ClassifierConfig &config() const noexcept { return config_; }
  const std::vector<std::string> &class_names() const noexcept { return class_names_; }
  std::size_t dimension() const noexcept { return dimension_; }

  nlohmann::json to_json() const;
  static ClassifierModel from_json(const nlohmann::json &j);
  void save(const std::filesystem::path &path) const;
  static ClassifierModel load(const std::filesystem::path &path);

private:
  struct Forest {
    std::vector<DecisionTree> trees;
  };
  struct Knn {
    std::vector<std::vector<double>> rows;
    std::vector<std::size_t> targets;
    std::size_t k = 5;
  };
  struct LinearSvm {
    std::vector<double> mean;
    std::vector<double> scale;
    std::vector<std::vector<double>> weights; // one-vs-rest, per class
    std::vector<double> bias;
  };

  ClassifierConfig config_;
  std::vector<std::string> class_names_;
  std::size_t dimension_ = 0;
  std::variant<Forest, Knn, LinearSvm> state_;
};

} // namespace tuberaid::attribution
