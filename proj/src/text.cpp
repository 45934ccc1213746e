#include "rst/text.hpp"

#include <array>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "rst/error.hpp"

namespace rst {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : DataError(what + " (line " + std::to_string(line) +
                (column ? ", column " + std::to_string(column) : std::string()) + ")"),
      line_(line),
      column_(column) {}

namespace text {
namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

struct Composition {
  char base;
  char32_t mark;
  char32_t composed;
};

constexpr std::array<Composition, 55> kCompositions{{
    {'A', 0x300, 0xC0}, {'E', 0x300, 0xC8}, {'I', 0x300, 0xCC}, {'O', 0x300, 0xD2},
    {'U', 0x300, 0xD9}, {'a', 0x300, 0xE0}, {'e', 0x300, 0xE8}, {'i', 0x300, 0xEC},
    {'o', 0x300, 0xF2}, {'u', 0x300, 0xF9}, {'A', 0x301, 0xC1}, {'E', 0x301, 0xC9},
    {'I', 0x301, 0xCD}, {'O', 0x301, 0xD3}, {'U', 0x301, 0xDA}, {'Y', 0x301, 0xDD},
    {'a', 0x301, 0xE1}, {'e', 0x301, 0xE9}, {'i', 0x301, 0xED}, {'o', 0x301, 0xF3},
    {'u', 0x301, 0xFA}, {'y', 0x301, 0xFD}, {'A', 0x302, 0xC2}, {'E', 0x302, 0xCA},
    {'I', 0x302, 0xCE}, {'O', 0x302, 0xD4}, {'U', 0x302, 0xDB}, {'a', 0x302, 0xE2},
    {'e', 0x302, 0xEA}, {'i', 0x302, 0xEE}, {'o', 0x302, 0xF4}, {'u', 0x302, 0xFB},
    {'A', 0x303, 0xC3}, {'N', 0x303, 0xD1}, {'O', 0x303, 0xD5}, {'a', 0x303, 0xE3},
    {'n', 0x303, 0xF1}, {'o', 0x303, 0xF5}, {'A', 0x308, 0xC4}, {'E', 0x308, 0xCB},
    {'I', 0x308, 0xCF}, {'O', 0x308, 0xD6}, {'U', 0x308, 0xDC}, {'a', 0x308, 0xE4},
    {'e', 0x308, 0xEB}, {'i', 0x308, 0xEF}, {'o', 0x308, 0xF6}, {'u', 0x308, 0xFC},
    {'y', 0x308, 0xFF}, {'A', 0x30A, 0xC5}, {'a', 0x30A, 0xE5}, {'C', 0x327, 0xC7},
    {'c', 0x327, 0xE7}, {'O', 0x30B, 0x150}, {'o', 0x30B, 0x151},
}};

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

// Decodes a 2-byte sequence at s[i] if present (combining marks are all in
// U+0300..U+036F, which is 2-byte UTF-8).
char32_t two_byte_at(std::string_view s, std::size_t i) {
  if (i + 1 >= s.size()) return 0;
  auto b0 = static_cast<unsigned char>(s[i]);
  auto b1 = static_cast<unsigned char>(s[i + 1]);
  if ((b0 & 0xE0) != 0xC0 || (b1 & 0xC0) != 0x80) return 0;
  return (static_cast<char32_t>(b0 & 0x1F) << 6) | (b1 & 0x3F);
}

}  // namespace

std::string_view trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !is_space(s[j])) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool starts_with_ci(std::string_view s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(s[i])) !=
        std::tolower(static_cast<unsigned char>(prefix[i])))
      return false;
  }
  return true;
}

std::string to_lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto c = static_cast<unsigned char>(s[i]);
    if (c < 0x80) {
      out += static_cast<char>(std::tolower(c));
    } else if (c == 0xC3 && i + 1 < s.size()) {
      auto n = static_cast<unsigned char>(s[i + 1]);
      // U+00C0..U+00DE map to +0x20, except the multiplication sign U+00D7.
      if (n >= 0x80 && n <= 0x9E && n != 0x97) n = static_cast<unsigned char>(n + 0x20);
      out += static_cast<char>(c);
      out += static_cast<char>(n);
      ++i;
    } else {
      out += static_cast<char>(c);
    }
  }
  return out;
}

std::string nfc(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (static_cast<unsigned char>(c) < 0x80) {
      char32_t mark = two_byte_at(s, i + 1);
      if (mark >= 0x300 && mark < 0x370) {
        bool composed = false;
        for (const auto& comp : kCompositions) {
          if (comp.base == c && comp.mark == mark) {
            append_utf8(out, comp.composed);
            composed = true;
            break;
          }
        }
        if (composed) {
          i += 2;
          continue;
        }
      }
    }
    out += c;
  }
  return out;
}

std::string strip_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s)
    if (!is_space(c)) out += c;
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw DataError("write failed for " + path);
}

}  // namespace text
}  // namespace rst
