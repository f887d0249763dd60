#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tuberaid/clients/http_transport.hpp"
#include "tuberaid/clients/rate_limiter.hpp"

namespace tuberaid::clients {

// metric key ("Perspective:Toxicity", "Rewire:Hate", ...) -> confidence in [0, 1]
using ToxicityScores = std::map<std::string, double>;

// The 16 Perspective and 6 Rewire metric keys, in report order.
const std::vector<std::string> &toxicity_metrics();

class ToxicityScorer {
public:
  virtual ~ToxicityScorer() = default;
  virtual ToxicityScores score(std::string_view text) = 0;
};

// Deterministic stand-in: every metric gets the fraction of the text's tokens
// (tokenizer output, unstemmed) that appear in the lexicon.
class LexiconScorer final : public ToxicityScorer {
public:
  explicit LexiconScorer(std::set<std::string> lexicon) : lexicon_(std::move(lexicon)) {}
  // One lowercase term per line; '#' starts a comment.
  static LexiconScorer from_file(const std::filesystem::path &path);

  ToxicityScores score(std::string_view text) override;
  double fraction(std::string_view text) const;

private:
  std::set<std::string> lexicon_;
};

// 16 hex digits of FNV-1a over the text; names the score fixture file.
std::string text_key(std::string_view text);

// Reads <dir>/<text_key>.json = {"text": ..., "scores": {...}}.
class FixtureScorer final : public ToxicityScorer {
public:
  explicit FixtureScorer(std::filesystem::path dir) : dir_(std::move(dir)) {}
  ToxicityScores score(std::string_view text) override; // NotFoundError on a miss

  static void write(const std::filesystem::path &dir, std::string_view text,
                    const ToxicityScores &scores);

private:
  std::filesystem::path dir_;
};

// Perspective comments:analyze over HTTP. Only the Perspective metrics are
// produced. The key comes from the named environment variable.
class PerspectiveScorer final : public ToxicityScorer {
public:
  PerspectiveScorer(std::string endpoint, const std::string &credential_env,
                    std::shared_ptr<HttpTransport> transport, std::shared_ptr<Clock> clock,
                    double requests_per_second = 1.0);
  ToxicityScores score(std::string_view text) override;

private:
  std::string endpoint_;
  std::string key_;
  std::shared_ptr<HttpTransport> transport_;
  std::shared_ptr<Clock> clock_;
  RateLimiter limiter_;
};

// Validates the text is nonempty and every returned score lies in [0, 1].
ToxicityScores score_comment(std::string_view text, ToxicityScorer &scorer);

} // namespace tuberaid::clients
