#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "tuberaid/ingest/records.hpp"

namespace tuberaid::language {

inline constexpr int kModelFormatVersion = 1;

// ln((1 + n) / (1 + df)) + 1
double smoothed_idf(std::size_t n, std::size_t df) noexcept;

struct CommunityModel {
  CommunityId id;
  std::size_t token_count = 0;
  std::map<std::string, std::size_t> term_counts;
  // TF on this community times IDF over the other communities, each other
  // community counting as one document.
  std::map<std::string, double> scores;

  std::size_t vocabulary_size() const noexcept { return term_counts.size(); }
  double score(std::string_view term) const;
};

struct KeywordSet {
  CommunityId community_id;
  std::vector<std::string> keywords; // descending score, ties lexicographic
  std::vector<double> scores;
  std::size_t k = 0;
};

class TfIdfModel {
public:
  TfIdfModel() = default;
  TfIdfModel(std::vector<CommunityModel> communities, std::size_t default_k);

  const std::vector<CommunityModel> &communities() const noexcept { return communities_; }
  const CommunityModel &community(std::string_view id) const;
  std::vector<CommunityId> community_ids() const;
  std::size_t default_k() const noexcept { return default_k_; }

  // Number of communities containing the term.
  std::size_t document_frequency(std::string_view term) const;
  // IDF with every community as a document; shared scale for text scoring.
  double global_idf(std::string_view term) const;

  nlohmann::json to_json() const;
  static TfIdfModel from_json(const nlohmann::json &j);
  void save(const std::filesystem::path &path) const;
  static TfIdfModel load(const std::filesystem::path &path);

private:
  std::vector<CommunityModel> communities_;
  std::map<std::string, std::size_t, std::less<>> document_frequency_;
  std::size_t default_k_ = 20;
};

// Needs >= 2 corpora with distinct ids, each with at least one token.
TfIdfModel train_tfidf(std::span<const ingest::CommunityCorpus> corpora, std::size_t default_k = 20,
                       std::size_t jobs = 1);

// Top `k` terms by score. Throws InvalidArgument when k == 0 or k exceeds
// the community's vocabulary.
KeywordSet top_keywords(const TfIdfModel &model, const CommunityId &community_id, std::size_t k);

std::vector<KeywordSet> all_keyword_sets(const TfIdfModel &model, std::size_t k);

// "rank,<community>,..." with one row per rank.
std::string keywords_csv(std::span<const KeywordSet> sets);

} // namespace tuberaid::language
