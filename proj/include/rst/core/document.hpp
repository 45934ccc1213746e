#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rst/core/tree.hpp"

namespace rst {

inline constexpr int kRootHead = -1;

// One token of the dependency layer. `head` is the document-level index of
// the governing token (always in the same sentence) or kRootHead.
struct Token {
  std::string form;
  std::string pos;
  std::string lemma;
  int head = kRootHead;
  int sentence = 0;
};

struct Edu {
  int index = 0;
  std::string text;
  Span tokens;
};

struct Document {
  std::string id;
  std::string language;
  std::vector<Edu> edus;
  std::vector<Token> tokens;
  std::optional<RstTree> gold;

  int edu_count() const noexcept { return static_cast<int>(edus.size()); }
};

// Checks EDU numbering, token spans (non-empty, in bounds, ordered and
// non-overlapping), dependency heads, and the gold tree if present.
std::vector<std::string> validate_document(const Document& doc);

}  // namespace rst
