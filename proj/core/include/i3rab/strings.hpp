#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace i3rab::strings {

std::string_view trim(std::string_view s);

// Splits on every occurrence of `sep`; keeps empty fields.
std::vector<std::string_view> split(std::string_view s, char sep);

// Splits on runs of ASCII whitespace; drops empty fields.
std::vector<std::string_view> split_ws(std::string_view s);

// Splits on the first occurrence of `sep` ("a -> b" style lines).
std::optional<std::pair<std::string_view, std::string_view>> split_once(
    std::string_view s, std::string_view sep);

bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);

std::optional<int> parse_int(std::string_view s);

// Lines of a document with a trailing '\r' removed from each.
std::vector<std::string_view> lines(std::string_view text);

// Removes Arabic short-vowel diacritics, shadda, sukun and tatweel.
std::string strip_diacritics(std::string_view s);

// Number of UTF-8 code points.
std::size_t utf8_length(std::string_view s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

// Fixed-precision decimal formatting ("%.*f").
std::string format_fixed(double value, int decimals);

}  // namespace i3rab::strings
