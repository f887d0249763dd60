#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tuberaid/attribution/classifier.hpp"
#include "tuberaid/clients/comments.hpp"
#include "tuberaid/ingest/dump_parser.hpp"
#include "tuberaid/language/similarity.hpp"
#include "tuberaid/synth/generator.hpp"
#include "tuberaid/timeline/lag.hpp"

namespace tuberaid::cli {

inline constexpr int kConfigVersion = 1;

struct SourceConfig {
  CommunityId community;
  std::vector<std::filesystem::path> files;
  ingest::FieldMapping mapping;
};

struct SweepConfig {
  std::size_t min = 0;
  std::size_t max = 200;
  std::size_t step = 10;
  std::vector<std::size_t> grid() const;
};

struct LagConfig {
  int max_lag = 7;
  std::vector<timeline::ClosedRange> comment_ranges;
  std::vector<timeline::ClosedRange> lag_ranges;
};

struct PdfConfig {
  std::size_t bins = 40;
  double lo = -1.0; // normalized-time display range
  double hi = 2.0;
};

struct StatsConfig {
  double alpha = 0.01;
  std::size_t sample = 50; // comments per video
  std::string scorer = "lexicon"; // lexicon | fixture | perspective
  std::filesystem::path lexicon;
  std::filesystem::path fixture_dir;
  std::string endpoint = "https://commentanalyzer.googleapis.com/v1alpha1";
  std::string credential_env = "PERSPECTIVE_API_KEY";
};

// One file drives every command. Relative paths resolve against the config
// file's directory; every output lands under output_dir.
struct PipelineConfig {
  std::filesystem::path output_dir = "out";
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::vector<CommunityId> communities; // empty: order of first appearance in the posts
  std::size_t k = 20;
  std::size_t min_comments = 90;
  std::size_t folds = 10;
  attribution::ClassifierConfig classifier;
  std::vector<attribution::Algorithm> compare = {
      attribution::Algorithm::random_forest, attribution::Algorithm::decision_tree,
      attribution::Algorithm::knn, attribution::Algorithm::linear_svm};
  language::Closeness closeness = language::Closeness::min_abs_difference;
  std::optional<synth::SynthConfig> synth;
  std::vector<SourceConfig> sources;
  clients::FetchConfig fetch;
  std::filesystem::path labels;
  SweepConfig sweep;
  std::vector<std::size_t> topk = {10, 12, 14, 16, 18, 20, 22, 24};
  CommunityId topk_community; // empty: the first community
  LagConfig lag;
  PdfConfig pdf;
  StatsConfig stats;

  static PipelineConfig load(const std::filesystem::path &path);
  static PipelineConfig from_json(const nlohmann::json &j, const std::filesystem::path &base_dir);
  nlohmann::json to_json() const;

  // Seeds every random component; used by the --seed flag.
  void set_seed(std::uint64_t s);
  void set_jobs(std::size_t n);

  std::filesystem::path synth_dir() const { return output_dir / "synth"; }
  std::filesystem::path interchange_dir() const { return output_dir / "interchange"; }
  std::filesystem::path models_dir() const { return output_dir / "models"; }
  std::filesystem::path reports_dir() const { return output_dir / "reports"; }
  std::filesystem::path posts_path() const { return interchange_dir() / "posts.ndjson"; }
  std::filesystem::path links_path() const { return interchange_dir() / "links.ndjson"; }
  std::filesystem::path comments_path() const { return interchange_dir() / "comments.ndjson"; }
  std::filesystem::path model_path() const { return models_dir() / "tfidf.json"; }
  std::filesystem::path classifier_path() const { return models_dir() / "classifier.json"; }
};

} // namespace tuberaid::cli
