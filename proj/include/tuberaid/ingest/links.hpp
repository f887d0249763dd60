#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tuberaid/ingest/records.hpp"

namespace tuberaid::ingest {

// True iff `id` is 11 characters from [A-Za-z0-9_-].
bool is_valid_video_id(std::string_view id) noexcept;

// Every video link of the five recognized shapes, in order of first
// appearance, deduplicated by video id within this text. Query parameters
// after the id are ignored.
std::vector<VideoLink> extract_video_links(std::string_view text, const PostRef &source = {});

// Canonical https URL for a link in its own shape.
std::string canonical_url(const VideoLink &link);

} // namespace tuberaid::ingest
