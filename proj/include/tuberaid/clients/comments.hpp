#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "tuberaid/clients/http_transport.hpp"
#include "tuberaid/clients/rate_limiter.hpp"
#include "tuberaid/ingest/records.hpp"

namespace tuberaid::clients {

enum class FetchMode { fixture, live };

struct FetchConfig {
  FetchMode mode = FetchMode::fixture;
  std::string endpoint = "https://www.googleapis.com/youtube/v3";
  std::string credential_env = "YOUTUBE_API_KEY"; // variable name, never the key itself
  double requests_per_second = 5.0;
  std::filesystem::path fixture_dir;
  std::size_t max_retries = 5;
  std::chrono::milliseconds backoff_base{500}; // doubled per retry
  std::size_t jobs = 4;                        // in-flight videos in a batch

  static FetchConfig from_json(const nlohmann::json &j);
  nlohmann::json to_json() const;
};

// "2019-01-02T03:04:05Z" (fractional seconds and numeric offsets accepted).
Timestamp parse_rfc3339(std::string_view text);
std::string format_rfc3339(Timestamp ts);

// Comments of one commentThreads page: each top-level comment followed by the
// replies embedded in its thread. Thread ids whose embedded replies are
// incomplete are appended to `incomplete_threads` when given.
std::vector<ingest::Comment> parse_comment_threads_page(
    const nlohmann::json &page, std::string_view video_id,
    std::vector<std::string> *incomplete_threads = nullptr);

// Fixture file layout: {"comments_disabled": true}, a single page with
// "items", or {"pages": [page, ...]}.
std::filesystem::path fixture_path(const std::filesystem::path &dir, std::string_view video_id);

class CommentClient {
public:
  // Live mode reads the credential at construction and throws ConfigError if
  // it is unset. A null transport in live mode selects the HTTPS transport.
  explicit CommentClient(FetchConfig config, std::shared_ptr<HttpTransport> transport = nullptr,
                         std::shared_ptr<Clock> clock = nullptr);

  // Comments and replies, replies flagged, duplicate ids dropped.
  // Throws NotFoundError, CommentsDisabledError, QuotaError, TransportError.
  std::vector<ingest::Comment> fetch(std::string_view video_id);

  const FetchConfig &config() const noexcept { return config_; }

private:
  std::vector<ingest::Comment> fetch_fixture(std::string_view video_id) const;
  std::vector<ingest::Comment> fetch_live(std::string_view video_id);
  nlohmann::json get(const std::string &url, std::string_view video_id);

  FetchConfig config_;
  std::string key_;
  std::shared_ptr<HttpTransport> transport_;
  std::shared_ptr<Clock> clock_;
  std::unique_ptr<RateLimiter> limiter_;
};

struct BatchResult {
  std::map<std::string, std::vector<ingest::Comment>> comments;
  std::vector<std::string> disabled;
  std::vector<std::string> not_found;
  std::vector<std::pair<std::string, std::string>> failed; // id, message
};

// Fetches up to config().jobs videos at once, tallying per-video failures.
// A quota error aborts the batch.
BatchResult fetch_batch(CommentClient &client, std::span<const std::string> video_ids);

} // namespace tuberaid::clients
