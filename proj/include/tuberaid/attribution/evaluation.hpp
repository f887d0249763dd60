#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tuberaid/attribution/classifier.hpp"
#include "tuberaid/attribution/dataset.hpp"

namespace tuberaid::attribution {

// counts[predicted][actual]: rows are predictions, columns the true labels.
struct ConfusionMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> counts;

  explicit ConfusionMatrix(std::vector<std::string> labels = {});

  void add(std::size_t predicted, std::size_t actual);
  std::size_t total() const;
  std::size_t predicted_total(std::size_t label) const; // row sum
  std::size_t actual_total(std::size_t label) const;    // column sum, the support
  std::size_t correct() const;                          // trace
};

struct ClassMetrics {
  std::string label;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;
  double false_positive_rate = 0.0;
  double false_negative_rate = 0.0;
};

struct FoldMetrics {
  std::size_t fold = 0;
  std::size_t size = 0;
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Macro precision and recall average over the labels that occur as either
// prediction or truth; a class never predicted has precision 0. The macro F1
// is the harmonic mean of the macro precision and recall.
struct MetricsReport {
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::vector<ClassMetrics> per_class; // every configured label, in order
  std::vector<FoldMetrics> folds;
};

MetricsReport metrics_from_confusion(const ConfusionMatrix &matrix);

// Fold index per sample. Each class is shuffled with its own derived seed
// and dealt round-robin, the dealing position carrying over between classes
// so fold sizes differ by at most one.
std::vector<std::size_t> stratified_folds(std::span<const std::size_t> targets, std::size_t folds,
                                          std::uint64_t seed);

struct CrossValidation {
  MetricsReport report;
  ConfusionMatrix confusion;
  std::vector<std::size_t> fold_of;
  std::vector<std::size_t> predictions; // per sample, out of fold
};

// Throws InvalidArgument if folds < 2, the data set has fewer rows than
// folds, or some fold's training part holds fewer than two classes.
CrossValidation cross_validate(const Dataset &data, std::size_t folds,
                               const ClassifierConfig &config);

// One row per classifier: classifier,accuracy,precision,recall,f1
struct NamedReport {
  std::string name;
  MetricsReport report;
};
std::string classifier_comparison_csv(std::span<const NamedReport> reports);
std::string folds_csv(const MetricsReport &report);
std::string per_class_csv(const MetricsReport &report);
// "predicted\actual,<labels...>" then one row per predicted label.
std::string confusion_csv(const ConfusionMatrix &matrix);

struct ThresholdData {
  Dataset data;
  std::size_t discarded_videos = 0; // videos left without a qualifying peak
};

struct ThresholdPoint {
  std::size_t threshold = 0;
  std::optional<double> accuracy; // empty when the grid point is undefined
  std::size_t rows = 0;
  std::size_t discarded_videos = 0;
  std::string note;
};

struct ThresholdCurve {
  std::vector<ThresholdPoint> points;
  std::optional<std::size_t> best_threshold; // smallest threshold of maximal accuracy
};

// Rebuilds the data set per threshold and cross-validates it. Thresholds must
// be nonempty and strictly ascending.
ThresholdCurve sweep_min_comments(std::span<const std::size_t> thresholds,
                                  const std::function<ThresholdData(std::size_t)> &builder,
                                  std::size_t folds, const ClassifierConfig &config);

std::string threshold_curve_csv(const ThresholdCurve &curve);

} // namespace tuberaid::attribution
