#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rst/core/document.hpp"

namespace rst {

// A stretch of surface text and the syntactic tokens it covers. Usually one
// token; a multiword token ("del" = "de" + "el") covers several.
struct SurfaceUnit {
  std::string text;
  Span tokens;
};

struct ConlluDocument {
  std::vector<Token> tokens;
  std::vector<SurfaceUnit> surface;
};

// Reads CoNLL-U. Comment lines are ignored, a blank line ends a sentence,
// empty nodes (n.m) are skipped, multiword ranges (n-m) only contribute
// their surface form. Heads are converted to document-level token indices.
// A lemma of "_" is replaced by the form. Throws ParseError with the line.
ConlluDocument parse_conllu(std::string_view text);

std::vector<Token> load_conllu(std::string_view text);

// Writes tokens back as CoNLL-U (one token per line, no multiword ranges).
std::string write_conllu(const std::vector<Token>& tokens);

}  // namespace rst
