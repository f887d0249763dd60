#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "tuberaid/ingest/records.hpp"

namespace tuberaid::ingest {

// Names the source fields that carry each Post attribute. Source schemas
// differ between imageboards and link aggregators, so nothing is hard-coded.
struct FieldMapping {
  std::string id_field = "no";
  std::string timestamp_field = "time";
  std::vector<std::string> body_fields = {"com"}; // joined with a newline
  std::string thread_field = "resto";             // empty/0/missing -> own id (thread starter)
  std::string url_field;                          // optional
  std::string records_field = "posts";            // array of records inside an object
  bool strip_markup = true;
  bool strip_fullname_prefix = false; // "t3_abc" -> "abc"

  static FieldMapping imageboard();
  static FieldMapping link_aggregator();
  static FieldMapping from_json(const nlohmann::json &j);
  nlohmann::json to_json() const;
};

struct ParseResult {
  std::vector<Post> posts;
  std::size_t records = 0;         // record-like values seen, including malformed ones
  std::size_t missing_fields = 0;  // no id or no positive timestamp
  std::size_t malformed = 0;       // line failed to parse, or record is not an object
  std::size_t duplicates = 0;      // repeated post id within a thread

  std::size_t skipped() const noexcept { return missing_fields + malformed + duplicates; }
};

// Accepts a single JSON document (array of records, or an object holding
// `records_field`) or newline-delimited JSON. Bad lines are tallied; a stream
// where nothing parses throws ParseError naming `source_name` and the byte
// offset of the first failure.
ParseResult parse_thread_dump(std::string_view raw, const CommunityId &community_id,
                              const FieldMapping &mapping,
                              std::string_view source_name = "<memory>");

ParseResult parse_dump_file(const std::filesystem::path &path, const CommunityId &community_id,
                            const FieldMapping &mapping);

// Parses files concurrently (bounded by `jobs`) and merges results in input order.
ParseResult parse_dump_files(std::span<const std::filesystem::path> paths,
                             const CommunityId &community_id, const FieldMapping &mapping,
                             std::size_t jobs = 1);

} // namespace tuberaid::ingest
