#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tuberaid/ingest/records.hpp"

namespace tuberaid::language {

inline constexpr std::string_view kStopwordVersion = "en-default-174";

struct TokenStream {
  std::vector<std::string> tokens; // lowercase stems
};

bool is_stopword(std::string_view token);
std::size_t stopword_count() noexcept;

// Whitespace-delimited chunk that is a URL (scheme, www. prefix, or host.tld/path).
bool looks_like_url(std::string_view chunk);

// Lowercased ASCII-alphanumeric runs with URLs, stopwords, pure numbers and
// tokens shorter than two characters removed. Not stemmed.
std::vector<std::string> tokenize(std::string_view text);

// tokenize() followed by Porter stemming of each token.
TokenStream tokenize_and_stem(std::string_view text);

// Sets and returns corpus.token_count.
std::size_t count_corpus_tokens(ingest::CommunityCorpus &corpus);

} // namespace tuberaid::language
