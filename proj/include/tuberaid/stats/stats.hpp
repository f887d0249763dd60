#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace tuberaid::stats {

enum class Group { attributed, non_attributed, baseline };

std::string_view to_string(Group g) noexcept;
Group group_from_string(std::string_view name);

struct ScoreSample {
  Group group = Group::baseline;
  std::string metric;
  std::vector<double> values; // each in [0, 1]
};

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
  bool significant = false; // set by compare_groups against the adjusted alpha
};

// sup_x |ECDF_a(x) - ECDF_b(x)|.
double ks_statistic(std::span<const double> a, std::span<const double> b);

// Survival function of the Kolmogorov distribution, P(K > lambda).
double kolmogorov_sf(double lambda);

// Statistic plus asymptotic p-value kolmogorov_sf(sqrt(n_a n_b / (n_a + n_b)) D).
// Throws InvalidArgument on an empty sample. The asymptotic form is rough
// below about ten observations per sample.
KsResult ks_two_sample(std::span<const double> a, std::span<const double> b);

// alpha / m. Throws InvalidArgument unless 0 < alpha < 1 and m >= 1.
double bonferroni_adjust(double alpha, std::size_t m);

struct MetricRow {
  std::string metric;
  bool complete = false; // all three groups present
  std::string warning;
  double attributed = 0.0; // group means
  double non_attributed = 0.0;
  double baseline = 0.0;
  KsResult ks1; // attributed vs non_attributed
  KsResult ks2; // attributed vs baseline
};

struct GroupComparison {
  double alpha = 0.01;
  std::size_t hypotheses = 0; // 2 per complete metric
  double adjusted_alpha = 0.0;
  std::vector<MetricRow> rows; // metric order of first appearance

  // metric,attributed,non_attributed,baseline,ks1,p1,ks2,p2
  std::string csv() const;
  nlohmann::json summary() const;
  std::size_t significant_count() const;
};

// Samples sharing (group, metric) are pooled. Metrics lacking a group get a
// warning row and do not count toward the hypothesis total.
GroupComparison compare_groups(std::span<const ScoreSample> samples, double alpha = 0.01);

// Up to `n` distinct indices of [0, size) drawn without replacement by the
// seed, returned ascending. All indices when size <= n.
std::vector<std::size_t> sample_indices(std::size_t size, std::size_t n, std::uint64_t seed);

} // namespace tuberaid::stats
