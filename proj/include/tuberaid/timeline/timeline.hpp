#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tuberaid/ingest/records.hpp"

namespace tuberaid::timeline {

using ingest::Comment;

constexpr Timestamp kSecondsPerDay = 86400;

// Calendar day (UTC) containing `ts`, counted from the epoch.
std::int64_t epoch_day(Timestamp ts) noexcept;

// The source thread's lifetime: t_yt is when the video link was posted
// (normalized time 0), t_last is the thread's last post (normalized time 1).
struct ThreadSpan {
  Timestamp t_yt = 0;
  Timestamp t_last = 0;
};

// (t - t_yt) / (t_last - t_yt) per time. Values outside [0, 1] are kept.
// Throws InvalidArgument when t_last == t_yt and when t_last < t_yt.
std::vector<double> normalize_timestamps(const ThreadSpan &span, std::span<const Timestamp> times);
double denormalize(const ThreadSpan &span, double normalized);

// Indices with 0 <= t <= 1.
std::vector<std::size_t> in_window(std::span<const double> normalized);

struct DailyBin {
  std::int64_t day_index = 0; // days since the first comment's UTC midnight
  std::size_t count = 0;
};

struct CommentTimeline {
  std::string video_id;
  std::vector<Comment> comments; // ascending by timestamp
  std::vector<DailyBin> daily_bins;
  std::int64_t first_epoch_day = 0; // epoch day of day_index 0

  std::vector<double> counts() const;
};

// Sorts comments (stable, by timestamp) and materializes one bin per UTC day
// from the first to the last comment, including empty days.
CommentTimeline bin_daily(std::string video_id, std::vector<Comment> comments);

struct PeakWindow {
  std::string video_id;
  std::int64_t start_day = 0; // inclusive day indices
  std::int64_t end_day = 0;
  std::size_t comment_count = 0;
  std::vector<Comment> comments;
};

struct PeakThreshold {
  double mean = 0.0;
  double stddev = 0.0; // population
  double cutoff() const noexcept { return mean + stddev; }
};

// Mean and population standard deviation over every daily bin.
PeakThreshold peak_threshold(const CommentTimeline &timeline);

// Days with count > mean + stddev are peaking; maximal runs of consecutive
// peaking days form one window. Windows below `min_comments` are dropped.
// Fewer than two bins yields no windows.
std::vector<PeakWindow> detect_peaks(const CommentTimeline &timeline, std::size_t min_comments);

struct DensityBin {
  double lower = 0.0;
  double upper = 0.0;
  double density = 0.0;
};

// Histogram over [min, max] of the sample, normalized to integrate to one.
// A degenerate range (all values equal) gets a unit-width bin around the value.
std::vector<DensityBin> activity_pdf(std::span<const double> values, std::size_t bin_count);

} // namespace tuberaid::timeline
