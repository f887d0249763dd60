#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tuberaid/language/tfidf.hpp"
#include "tuberaid/timeline/timeline.hpp"

namespace tuberaid::attribution {

inline const std::string kUnrelated = "UNRELATED";

// Slot layout of a feature vector: community blocks in model order, each
// holding that community's top-K keywords in rank order. Terms shared by two
// communities occupy a slot in each block.
struct FeatureSchema {
  std::vector<language::KeywordSet> keyword_sets;

  static FeatureSchema from_model(const language::TfIdfModel &model, std::size_t k);

  std::size_t dimension() const noexcept;
  std::vector<std::string> feature_names() const; // "<community>:<term>"
};

struct FeatureVector {
  std::string video_id;
  std::int64_t start_day = 0;
  std::int64_t end_day = 0;
  std::size_t comment_count = 0;
  std::vector<double> values;
};

// Community ids in model order followed by UNRELATED.
std::vector<std::string> label_set(const language::TfIdfModel &model);

// Video-side TF-IDF (community-independent IDF) of each schema keyword over
// the documents; keywords that do not occur are exactly 0.
std::vector<double> featurize_documents(std::span<const std::string> documents,
                                        const FeatureSchema &schema,
                                        const language::TfIdfModel &model);

// Throws InvalidArgument for a window without comments.
FeatureVector featurize_peak(const timeline::PeakWindow &peak, const FeatureSchema &schema,
                             const language::TfIdfModel &model);

} // namespace tuberaid::attribution
