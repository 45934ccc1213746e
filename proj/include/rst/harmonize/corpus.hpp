#pragma once

#include <string>
#include <vector>

#include "rst/core/document.hpp"

namespace rst {

// Records every file opened through the corpus readers below.
struct AccessLog {
  std::vector<std::string> paths;
};

// A harmonized corpus directory holds, per document, `<id>.tree` (bracketed
// tree), `<id>.edus` (lines `k<TAB>first<TAB>last<TAB>text`, 1-based EDU
// number and inclusive 1-based token range, "-" for none) and `<id>.conllu`,
// plus `corpus.tsv` listing `id<TAB>language` in order. Documents without a
// `.tree` file are read without gold tree.
void write_corpus(const std::string& dir, const std::vector<Document>& docs);
std::vector<Document> read_corpus(const std::string& dir, AccessLog* log = nullptr);

std::string format_edus(const std::vector<Edu>& edus);
std::vector<Edu> parse_edus(std::string_view text);

// File-system safe name for a document id.
std::string file_stem(const std::string& id);

// Writes one bracketed tree per document as `<dir>/<id>.tree`.
void write_trees(const std::string& dir, const std::vector<std::string>& ids,
                 const std::vector<RstTree>& trees);

// Reads `<dir>/<id>.tree` for every id.
std::vector<RstTree> read_trees(const std::string& dir, const std::vector<std::string>& ids,
                                AccessLog* log = nullptr);

}  // namespace rst
