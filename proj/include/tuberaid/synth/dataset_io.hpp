#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tuberaid/synth/generator.hpp"

namespace tuberaid::synth {

struct LabelRow {
  std::string video_id;
  std::string label;
  std::string split;       // "train" or "wild"
  CommunityId linked_from; // empty when never linked
  bool raided = false;
};

// Writes, under `dir`:
//   posts.ndjson, comments.ndjson   interchange records
//   labels.csv                      video_id,label,split,linked_from,raided
//   truth.ndjson                    planted raid and surge parameters
//   dumps/<community>.ndjson|.json  raw source dumps in each community's schema
//   fixtures/comments/<video>.json  comment-thread pages for fixture-mode fetching
//   manifest.json                   seed, config hash, counts
// Identical datasets produce byte-identical trees.
void write_dataset(const SyntheticDataset &ds, const SynthConfig &config,
                   const std::filesystem::path &dir);

std::vector<LabelRow> label_rows(const SyntheticDataset &ds);
std::string labels_csv(const std::vector<LabelRow> &rows);
std::vector<LabelRow> read_labels(const std::filesystem::path &path);

// Imageboard records ({no, time, com, resto}) or link-aggregator records
// ({id, created_utc, title|body, link_id, url}) for one community.
std::string community_dump(const SyntheticDataset &ds, const CommunitySpec &spec);
std::filesystem::path dump_file_name(const CommunitySpec &spec);

// {"pages": [...]} with `page_size` threads per page.
nlohmann::json comment_fixture(const GeneratedVideo &video, std::size_t page_size = 100);

} // namespace tuberaid::synth
