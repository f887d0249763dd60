#pragma once

#include <functional>
#include <span>
#include <vector>

namespace tuberaid::timeline {

struct LagEstimate {
  int lag_days = 0; // positive: target trails source
  double correlation = 0.0;
};

// Normalized cross-correlation of the mean-centered, zero-padded series at
// one shift: sum_t s[t] * u[t + lag] / (|s| |u|).
double normalized_cross_correlation(std::span<const double> source,
                                    std::span<const double> target, int lag);

// Argmax over shifts in [-max_lag, max_lag]. Ties go to the smaller |lag|,
// then to the negative shift. A zero-variance series gives {0, 0.0}.
LagEstimate estimate_lag(std::span<const double> source, std::span<const double> target,
                         int max_lag);

struct ClosedRange {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double v) const noexcept { return v >= lo && v <= hi; }
};

struct GridPoint {
  ClosedRange comments;
  ClosedRange lag;
  double objective = 0.0;
};

struct GridSearchResult {
  std::vector<GridPoint> points; // row-major over (comments, lag)
  GridPoint best;                // first maximum in row-major order
};

// Exhaustive search over (comment-count range, lag range) pairs.
GridSearchResult grid_search(
    std::span<const ClosedRange> comment_ranges, std::span<const ClosedRange> lag_ranges,
    const std::function<double(const ClosedRange &comments, const ClosedRange &lag)> &objective);

} // namespace tuberaid::timeline
