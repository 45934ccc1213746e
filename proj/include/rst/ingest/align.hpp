#pragma once

#include <string>
#include <vector>

#include "rst/core/tree.hpp"
#include "rst/ingest/conllu.hpp"

namespace rst {

// Assigns tokens to EDUs. Texts are compared after NFC normalization with
// all whitespace removed; the concatenated EDU texts must equal the
// concatenated surface forms. Each surface unit goes to the EDU whose
// character span holds most of it (ties to the earlier EDU), so spans
// partition the tokens in order. Throws DataError on an empty EDU text, a
// text mismatch, or an EDU left without tokens.
std::vector<Span> align_edus(const std::vector<std::string>& edu_texts,
                             const std::vector<SurfaceUnit>& surface);

std::vector<Span> align_edus(const std::vector<std::string>& edu_texts,
                             const std::vector<Token>& tokens);

}  // namespace rst
