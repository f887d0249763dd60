#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace tuberaid {

using CommunityId = std::string;
using Timestamp = std::int64_t; // seconds since epoch, UTC

} // namespace tuberaid

namespace tuberaid::ingest {

struct Post {
  CommunityId community_id;
  std::string thread_id;
  std::string post_id;
  Timestamp timestamp = 0;
  std::string body;
  std::optional<std::string> url_field;

  bool operator==(const Post &) const = default;
};

struct Comment {
  std::string video_id;
  std::string comment_id;
  Timestamp timestamp = 0;
  std::string text;
  bool is_reply = false;

  bool operator==(const Comment &) const = default;
};

struct PostRef {
  CommunityId community_id;
  std::string thread_id;
  std::string post_id;

  bool operator==(const PostRef &) const = default;
};

enum class UrlForm {
  watch,        // youtube.com/watch?v=ID
  short_link,   // youtu.be/ID
  mobile_watch, // m.youtube.com/watch?v=ID
  mobile_short, // m.youtu.be/ID
  embed,        // youtube.com/embed/ID
};

std::string_view to_string(UrlForm form) noexcept;
UrlForm url_form_from_string(std::string_view name);

struct VideoLink {
  std::string video_id;
  PostRef source_post;
  UrlForm url_form = UrlForm::watch;

  bool operator==(const VideoLink &) const = default;
};

struct CommunityCorpus {
  CommunityId community_id;
  std::vector<std::string> documents;
  std::size_t token_count = 0; // set by language::count_corpus_tokens
};

// Concatenates post bodies (plus the url field where present) in post order.
// Throws InvalidArgument on an empty list or a post from another community.
CommunityCorpus build_corpus(std::span<const Post> posts, const CommunityId &community_id);

// Interchange records: one JSON object per line with fixed field names.
nlohmann::json to_json(const Post &post);
nlohmann::json to_json(const Comment &comment);
nlohmann::json to_json(const VideoLink &link);
Post post_from_json(const nlohmann::json &j);
Comment comment_from_json(const nlohmann::json &j);
VideoLink link_from_json(const nlohmann::json &j);

std::string to_ndjson(std::span<const Post> posts);
std::string to_ndjson(std::span<const Comment> comments);
std::string to_ndjson(std::span<const VideoLink> links);

// Readers accept plain or gzip-compressed files.
std::vector<Post> read_posts(const std::filesystem::path &path);
std::vector<Comment> read_comments(const std::filesystem::path &path);
std::vector<VideoLink> read_links(const std::filesystem::path &path);

// Whole-file read, transparently decompressing gzip.
std::string read_file(const std::filesystem::path &path);

} // namespace tuberaid::ingest
