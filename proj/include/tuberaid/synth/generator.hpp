#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tuberaid/common/random.hpp"
#include "tuberaid/ingest/records.hpp"
#include "tuberaid/synth/vocabulary.hpp"
#include "tuberaid/timeline/timeline.hpp"

namespace tuberaid::synth {

// Inclusive bounds of a uniform draw.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double draw(Rng &rng) const { return lo == hi ? lo : rng.uniform(lo, hi); }
  std::int64_t draw_int(Rng &rng) const;
};

enum class DumpSchema { imageboard, link_aggregator };

struct CommunitySpec {
  CommunityId id;
  DumpSchema schema = DumpSchema::imageboard;
  std::size_t topical_words = 300;
  std::size_t slang_words = 12;
  double slang_share = 0.5; // probability mass of slang within the community vocabulary
  double topical_exponent = 0.6;
  double slang_exponent = 0.3;
  double generic_share = 0.4; // fraction of post tokens drawn from the generic vocabulary
  std::size_t filler_threads = 150;
  Interval posts_per_thread{5, 30};
  Interval post_length{8, 30};
  Interval thread_lifetime_days{0.5, 3};
};

struct VideoSpec {
  Interval length_days{30, 60};
  Interval baseline_rate{15, 25}; // comments per day
  double upload_boost = 1.0;      // day-0 rate multiplier excess, decaying
  double boost_decay_days = 2.0;
  Interval comment_length{4, 14};
  double reply_fraction = 0.2;
  double stopword_rate = 0.15; // filler function words mixed into comments
};

struct RaidRanges {
  Interval intensity{5, 10}; // multiple of the baseline rate
  Interval duration_days{1, 3};
  Interval slang_mix{0.3, 0.6};
  Interval thread_posts{20, 80};
};

struct SurgeRanges {
  Interval intensity{5, 10};
  Interval duration_days{1, 3};
};

struct SynthConfig {
  std::uint64_t seed = 0;
  Timestamp base_time = 1546300800; // 2019-01-01T00:00:00Z
  std::int64_t span_days = 150;     // upload days are drawn from [0, span_days)
  std::size_t generic_words = 2000;
  double generic_exponent = 0.8;
  std::size_t topical_overlap = 40; // topical words shared by the first two communities
  std::vector<CommunitySpec> communities;
  VideoSpec video;
  std::size_t raided_per_community = 50;
  std::size_t unrelated = 50;
  RaidRanges raid;
  SurgeRanges surge;
  std::size_t wild_per_community = 40;
  double wild_raid_probability = 0.3;
  double toxic_rate_baseline = 0.01; // per comment token
  double toxic_rate_raid = 0.06;
  std::vector<std::string> toxic_terms;

  // Three communities and the 150 + 50 video split.
  static SynthConfig defaults();
  static SynthConfig from_json(const nlohmann::json &j);
  nlohmann::json to_json() const;
  // FNV-1a over the canonical JSON, as 16 hex digits.
  std::string hash() const;
};

struct CommunityProfile {
  CommunityId id;
  WeightedVocabulary vocabulary; // topical and slang terms together
  std::vector<std::string> slang;
  std::vector<std::string> topical;
  double generic_share = 0.4;
  Interval post_length{8, 30};
  Interval posts_per_thread{5, 30};
  Interval thread_lifetime_days{0.5, 3};
};

struct Profiles {
  WeightedVocabulary generic;
  std::vector<CommunityProfile> communities;
};

// Slang is disjoint across communities and from the generic vocabulary.
Profiles build_profiles(const SynthConfig &config);

// Standalone corpora of `posts_per_community` posts each.
std::vector<ingest::CommunityCorpus> generate_corpora(const Profiles &profiles,
                                                      std::size_t posts_per_community,
                                                      std::uint64_t seed);

std::string generate_post_text(const CommunityProfile &community,
                               const WeightedVocabulary &generic, Rng &rng);

struct RaidSpec {
  CommunityId source;
  std::int64_t start_day = 0; // relative to the upload day
  std::int64_t duration_days = 1;
  double intensity = 5.0;
  double slang_mix = 0.3;
};

struct SurgeSpec {
  std::int64_t start_day = 0;
  std::int64_t duration_days = 1;
  double intensity = 5.0;
};

struct VideoParams {
  std::string video_id;
  std::int64_t upload_day = 0; // epoch day
  std::int64_t length_days = 30;
  double baseline_rate = 20.0;
};

struct GeneratedVideo {
  timeline::CommentTimeline timeline;
  std::string label; // source community or UNRELATED
  std::vector<std::string> parent_ids; // per comment; empty for top-level
  std::optional<RaidSpec> raid;
  std::optional<SurgeSpec> surge;
};

// Baseline generic comments every day, plus raid comments carrying the
// source vocabulary at the slang-mix rate, plus generic surge comments.
// Throws InvalidArgument when length_days < 1 or a raid names no profile.
GeneratedVideo generate_video(const VideoParams &params, const SynthConfig &config,
                              const Profiles &profiles, const std::optional<RaidSpec> &raid,
                              const std::optional<SurgeSpec> &surge, std::uint64_t seed);

struct SyntheticVideo {
  GeneratedVideo video;
  std::string split; // "train" or "wild"
  CommunityId linked_from; // empty when never linked
};

struct SyntheticDataset {
  std::uint64_t seed = 0;
  std::string config_hash;
  Profiles profiles;
  std::vector<CommunitySpec> specs;
  std::vector<ingest::Post> posts; // per community, ascending post number
  std::vector<SyntheticVideo> videos;

  std::vector<ingest::CommunityCorpus> corpora() const;
};

SyntheticDataset generate_dataset(const SynthConfig &config, std::size_t jobs = 1);

} // namespace tuberaid::synth
