#pragma once

#include <string>
#include <string_view>

#include "rst/ingest/raw_tree.hpp"

namespace rst {

// Reader for the two bracketed treebank dialects.
//
//   dis:  ( Root (span 1 3)
//           ( Nucleus (leaf 1) (rel2par Comparison) (text _!Consumer ..._!) ) ... )
//   lisp: the same node grammar with double-quoted text ("..." with backslash
//         escapes) and ';' line comments.
//
// Keywords are case-insensitive. Relation names are lowercased and lose the
// embedded-relation suffix "-e". Leaves get position = leaf number - 1.
// Throws ParseError with line/column on malformed input.
RawNode parse_dis(std::string_view text);
RawNode parse_lisp(std::string_view text);

// Writers producing text the readers above accept; re-reading yields an
// identical RawNode.
std::string write_dis(const RawNode& root);
std::string write_lisp(const RawNode& root);

}  // namespace rst
