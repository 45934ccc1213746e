#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace rst::text {

std::string_view trim(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);

// Splits on runs of ASCII whitespace.
std::vector<std::string> split_ws(std::string_view s);

bool starts_with_ci(std::string_view s, std::string_view prefix);

// Lowercases ASCII and the Latin-1 supplement (U+00C0..U+00DE).
std::string to_lower(std::string_view s);

// Canonical composition for Latin letters followed by the common combining
// marks (grave, acute, circumflex, tilde, diaeresis, ring, cedilla). Covers
// the precomposed characters of the Latin-1 supplement; other sequences are
// copied unchanged.
std::string nfc(std::string_view s);

// Drops every whitespace byte.
std::string strip_whitespace(std::string_view s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace rst::text
