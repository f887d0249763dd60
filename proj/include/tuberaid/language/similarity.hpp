#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "tuberaid/language/tfidf.hpp"

namespace tuberaid::language {

// Which IDF the video-side scores use.
enum class VideoIdf {
  community,   // df over source communities (shared scale with the model)
  intra_video, // df over the video's own comments
};

// How "closest language" is decided.
enum class Closeness {
  min_abs_difference, // |community average - video average| smallest
  max_average,        // highest community average
};

// Term -> TF (over all documents) x IDF for a set of comments.
std::map<std::string, double> video_term_scores(std::span<const std::string> documents,
                                                const TfIdfModel &model,
                                                VideoIdf idf = VideoIdf::community);

struct CommunityAverage {
  CommunityId community_id;
  double average = 0.0;
};

struct TextScores {
  double video_average = 0.0;
  std::vector<CommunityAverage> community_averages; // model order
  std::vector<std::string> top_terms;
  std::vector<double> top_scores;
  bool short_vocabulary = false; // fewer than K distinct terms
};

// Averages the video's top-K term scores, and each community's scores for the
// very same terms (absent terms count as 0). Throws on an empty document list.
TextScores score_text_against_model(std::span<const std::string> documents,
                                    const TfIdfModel &model, std::size_t k,
                                    VideoIdf idf = VideoIdf::community);

struct NearestCommunity {
  CommunityId community_id;
  double distance = 0.0;
  bool degenerate = false; // every community average is zero
};

// Ties: higher community average, then lexicographically smaller id.
NearestCommunity nearest_community(const TextScores &scores,
                                   Closeness rule = Closeness::min_abs_difference);

} // namespace tuberaid::language
