#pragma once

#include <filesystem>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace tuberaid {

// RFC 4180 quoting: fields containing separators, quotes or newlines are
// wrapped in double quotes with embedded quotes doubled.
std::string csv_escape(std::string_view field);

void write_csv_row(std::ostream &out, const std::vector<std::string> &fields);

std::vector<std::vector<std::string>> read_csv(const std::filesystem::path &path);
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

// Fixed-point with the given number of decimals.
std::string format_fixed(double value, int decimals);

// "294/1,176 (25%)"
std::string format_fraction(std::size_t numerator, std::size_t denominator);

std::string with_thousands(std::size_t value);

// Writes `contents` to `path`, creating parent directories.
void write_text_file(const std::filesystem::path &path, std::string_view contents);

} // namespace tuberaid
