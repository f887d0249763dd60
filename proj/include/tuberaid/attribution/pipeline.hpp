#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tuberaid/attribution/classifier.hpp"
#include "tuberaid/attribution/dataset.hpp"
#include "tuberaid/attribution/evaluation.hpp"
#include "tuberaid/attribution/features.hpp"
#include "tuberaid/ingest/records.hpp"
#include "tuberaid/language/similarity.hpp"
#include "tuberaid/language/tfidf.hpp"
#include "tuberaid/timeline/lag.hpp"
#include "tuberaid/timeline/timeline.hpp"

namespace tuberaid::attribution {

struct LabeledTimeline {
  timeline::CommentTimeline timeline;
  std::string label; // a community id or UNRELATED
};

struct PeakDataset {
  Dataset data;
  std::vector<FeatureVector> features; // parallel to data.rows
  std::size_t discarded_videos = 0;
};

// One row per peak with at least `min_comments` comments. Labels must belong
// to label_set(model).
PeakDataset build_peak_dataset(std::span<const LabeledTimeline> videos,
                               const FeatureSchema &schema, const language::TfIdfModel &model,
                               std::size_t min_comments, std::size_t jobs = 1);

struct PeakVerdict {
  std::int64_t start_day = 0;
  std::int64_t end_day = 0;
  std::size_t comment_count = 0;
  std::string label;
};

struct VideoVerdict {
  std::string video_id;
  bool discarded = false;
  std::string verdict; // empty when discarded
  std::vector<PeakVerdict> peaks;
};

struct WildReport {
  std::vector<VideoVerdict> videos; // input order
  std::size_t attributed = 0;       // verdict names a community
  std::size_t unattributed = 0;     // verdict UNRELATED
  std::size_t discarded = 0;        // no peak met the threshold

  std::string csv() const;
  std::string ndjson() const;
};

// Most frequent label; a tie for first place yields UNRELATED.
std::string majority_verdict(std::span<const std::string> labels);

WildReport attribute_in_the_wild(std::span<const timeline::CommentTimeline> videos,
                                 const language::TfIdfModel &model, const FeatureSchema &schema,
                                 const ClassifierModel &classifier, std::size_t min_comments,
                                 std::size_t jobs = 1);

// Where a video was linked: the thread of its first mention.
struct VideoSource {
  std::string video_id;
  CommunityId community_id;
  std::string thread_id;
  timeline::ThreadSpan span;           // first mention .. last post of the thread
  std::vector<Timestamp> thread_times; // every post of that thread, ascending
};

// Videos linked from exactly one community, sorted by id. Links whose post
// is unknown are ignored.
std::vector<VideoSource> single_community_sources(std::span<const ingest::Post> posts,
                                                  std::span<const ingest::VideoLink> links);

// Links found in every post body and url field.
std::vector<ingest::VideoLink> extract_all_links(std::span<const ingest::Post> posts);

struct SourcedTimeline {
  VideoSource source;
  timeline::CommentTimeline timeline;
};

// Texts of comments with normalized time in [0, 1]. Empty for a degenerate span.
std::vector<std::string> window_texts(const SourcedTimeline &video);

// Normalized comment times; empty for a degenerate span.
std::vector<double> normalized_comment_times(const SourcedTimeline &video);

// Daily thread-post and comment counts on a shared day axis, then the lag.
timeline::LagEstimate video_lag(const SourcedTimeline &video, int max_lag);

// Nearest-community probe of one video's in-window comments.
struct LanguageProbe {
  std::string video_id;
  CommunityId truth;
  CommunityId predicted; // empty when the window holds no comment
  std::size_t window_comments = 0;
  int lag_days = 0;
  bool correct() const { return !predicted.empty() && predicted == truth; }
};

LanguageProbe probe_language(const SourcedTimeline &video, const language::TfIdfModel &model,
                             std::size_t k, language::Closeness rule, int max_lag);

struct Tally {
  std::string key;
  std::size_t correct = 0;
  std::size_t total = 0;
};

// Per-community accuracy of nearest-community language matching. Videos
// without in-window comments are not counted.
std::vector<Tally> language_accuracy(std::span<const LanguageProbe> probes);
std::string tally_csv(std::string_view key_name, std::span<const Tally> tallies);

// Keyword-count sweep over the videos of one community (all when empty).
std::vector<Tally> topk_language_sweep(std::span<const SourcedTimeline> videos,
                                       const language::TfIdfModel &model,
                                       std::span<const std::size_t> ks,
                                       const CommunityId &community, language::Closeness rule,
                                       std::size_t jobs = 1);

// Language accuracy restricted to probes whose comment count and lag fall in
// the ranges, over the given community's videos. 0 when none qualifies.
double probe_accuracy(std::span<const LanguageProbe> probes, const CommunityId &community,
                      const timeline::ClosedRange &comments, const timeline::ClosedRange &lag);

std::string grid_search_csv(const timeline::GridSearchResult &result);

} // namespace tuberaid::attribution
