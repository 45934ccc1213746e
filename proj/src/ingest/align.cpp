#include "rst/ingest/align.hpp"

#include <algorithm>

#include "rst/error.hpp"
#include "rst/text.hpp"

namespace rst {

std::vector<Span> align_edus(const std::vector<std::string>& edu_texts,
                             const std::vector<SurfaceUnit>& surface) {
  std::string edu_stream;
  std::vector<std::size_t> edu_end;
  for (std::size_t i = 0; i < edu_texts.size(); ++i) {
    std::string t = text::strip_whitespace(text::nfc(edu_texts[i]));
    if (t.empty()) throw DataError("EDU " + std::to_string(i + 1) + " has empty text");
    edu_stream += t;
    edu_end.push_back(edu_stream.size());
  }

  std::string token_stream;
  for (const auto& unit : surface) token_stream += text::strip_whitespace(text::nfc(unit.text));
  if (token_stream != edu_stream) {
    std::size_t k = 0;
    while (k < token_stream.size() && k < edu_stream.size() && token_stream[k] == edu_stream[k]) ++k;
    throw DataError("EDU texts do not match the token layer at character " + std::to_string(k) +
                    " (EDU text '" + edu_stream.substr(k, 20) + "', tokens '" +
                    token_stream.substr(k, 20) + "')");
  }

  std::vector<Span> spans(edu_texts.size(), Span{-1, -1});
  std::size_t offset = 0;
  std::size_t edu = 0;
  for (const auto& unit : surface) {
    const std::size_t len = text::strip_whitespace(text::nfc(unit.text)).size();
    const std::size_t begin = offset;
    const std::size_t end = offset + len;
    offset = end;
    if (len == 0) continue;
    while (edu < edu_end.size() && edu_end[edu] <= begin) ++edu;
    std::size_t best = edu;
    std::size_t best_overlap = 0;
    for (std::size_t e = edu; e < edu_end.size(); ++e) {
      const std::size_t e_begin = e == 0 ? 0 : edu_end[e - 1];
      if (e_begin >= end) break;
      const std::size_t overlap = std::min(end, edu_end[e]) - std::max(begin, e_begin);
      if (overlap > best_overlap) {
        best_overlap = overlap;
        best = e;
      }
    }
    Span& s = spans[best];
    if (s.begin < 0) s.begin = unit.tokens.begin;
    s.end = unit.tokens.end;
  }

  for (std::size_t i = 0; i < spans.size(); ++i) {
    if (spans[i].begin < 0)
      throw DataError("EDU " + std::to_string(i + 1) + " received no tokens");
  }
  return spans;
}

std::vector<Span> align_edus(const std::vector<std::string>& edu_texts,
                             const std::vector<Token>& tokens) {
  std::vector<SurfaceUnit> surface;
  surface.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const int k = static_cast<int>(i);
    surface.push_back(SurfaceUnit{tokens[i].form, Span{k, k + 1}});
  }
  return align_edus(edu_texts, surface);
}

}  // namespace rst
