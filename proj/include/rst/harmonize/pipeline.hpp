#pragma once

#include <set>
#include <string>
#include <vector>

#include "rst/core/document.hpp"
#include "rst/harmonize/label_mapping.hpp"

namespace rst {

// One line of a corpus manifest:
//   doc_id <TAB> tree_file <TAB> conllu_file <TAB> language
// Paths are relative to the manifest. A conllu_file of "-" means no token
// layer. Blank lines and lines starting with '#' are ignored.
struct ManifestEntry {
  std::string id;
  std::string tree_path;
  std::string conllu_path;
  std::string language;
};

std::vector<ManifestEntry> read_manifest(const std::string& path);

enum class TreeFormat { Dis, Lisp, Rs3 };

// From the extension: .dis; .lisp or .rst; .rs3. Throws DataError otherwise.
TreeFormat format_of(const std::string& path);

struct HarmonizeOptions {
  // Languages whose documents start with a title segment to be dropped.
  std::set<std::string> drop_title;
};

struct HarmonizedDocument {
  Document doc;
  std::vector<std::string> warnings;
  // Source relation names (without "span") and nuclearity-relation labels.
  std::set<std::string> relations;
  std::set<std::string> labels;
};

// Reads, lifts, repairs, binarizes and maps one document, then aligns its
// EDUs with the token layer. Throws DataError (or ParseError) on failure.
HarmonizedDocument harmonize_document(const ManifestEntry& entry, const LabelMapping& mapping,
                                      const HarmonizeOptions& options = {});

// Same, from in-memory contents. `conllu` may be empty for no token layer.
HarmonizedDocument harmonize_document(const std::string& id, const std::string& language,
                                      TreeFormat format, const std::string& tree_text,
                                      const std::string& conllu, const LabelMapping& mapping,
                                      const HarmonizeOptions& options = {});

struct CorpusStats {
  int docs = 0;
  int trees = 0;
  long edus = 0;
  long cdus = 0;
  int max_edus = 0;
  int min_edus = 0;
  double avg_edus = 0.0;
  long words = 0;
  int relations = 0;
  int labels = 0;
};

CorpusStats compute_stats(int manifest_docs, const std::vector<HarmonizedDocument>& docs);

// Aligned text table with one row per corpus.
std::string format_stats(const std::vector<std::pair<std::string, CorpusStats>>& rows);

}  // namespace rst
