#pragma once

#include <string>
#include <string_view>

namespace tuberaid::language {

inline constexpr std::string_view kStemmerVersion = "porter-1980-reference-c";

// Porter (1980) suffix stripping, matching Martin Porter's reference ANSI C
// implementation including its two documented departures ("bli" -> "ble",
// "logi" -> "log") and leaving words of length <= 2 untouched. Input is
// expected to be lowercase.
std::string porter_stem(std::string_view word);

} // namespace tuberaid::language
