#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "rst/core/document.hpp"
#include "rst/features/features.hpp"
#include "rst/model/model.hpp"

namespace rst {

// Source word -> English word. The first entry for a word wins.
class BilingualDictionary {
 public:
  // `source<TAB>english` lines; blank lines and '#' comments are skipped.
  static BilingualDictionary from_text(std::string_view tsv);
  static BilingualDictionary from_file(const std::string& path);

  void add(std::string_view source, std::string_view english);
  // Exact form first, then lowercase.
  std::optional<std::string> lookup(std::string_view word) const;
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::map<std::string, std::string, std::less<>> entries_;
  std::map<std::string, std::string, std::less<>> lowered_;
};

// Token, then lemma, then stem; the original token when nothing is found.
std::string translate(std::string_view token, std::string_view lemma,
                      const std::optional<std::string>& stem, const BilingualDictionary& dict);

// Word function for the feature extractor that translates, then lowercases.
WordFn translating_word(const BilingualDictionary& dict);

class EmbeddingTable {
 public:
  static constexpr int kDefaultDim = 50;

  // Text format: header `<vocab_size> <dim>`, then `word v1 ... v_dim` per
  // line. Vectors are cut to the first `keep_dims` dimensions.
  static EmbeddingTable from_text(std::string_view text, int keep_dims = kDefaultDim);
  static EmbeddingTable from_file(const std::string& path, int keep_dims = kDefaultDim);
  std::string to_text() const;

  EmbeddingTable() = default;
  EmbeddingTable(std::vector<std::string> words, Eigen::MatrixXd vectors);

  int dim() const noexcept { return static_cast<int>(vectors_.cols()); }
  std::size_t size() const noexcept { return words_.size(); }
  const std::vector<std::string>& words() const noexcept { return words_; }
  const Eigen::VectorXd& average() const noexcept { return average_; }
  bool contains(std::string_view word) const { return index_.find(word) != index_.end(); }

  // The row for `word`, or the average vector.
  Eigen::VectorXd embed(std::string_view word) const;

 private:
  std::vector<std::string> words_;
  Eigen::MatrixXd vectors_;
  Eigen::VectorXd average_;
  std::map<std::string, int, std::less<>> index_;
};

inline Eigen::VectorXd embed(std::string_view word, const EmbeddingTable& table) {
  return table.embed(word);
}

// Concatenation of the 7 word slots of an EDU; NONE gives zeros.
Eigen::VectorXd edu_word_vector(const EduSymbols& edu, const EmbeddingTable& table);

// Adds the table's words to the word vocabulary.
Vocabularies with_embedding_vocabulary(Vocabularies vocab, const EmbeddingTable& table);

// Copies table vectors into the word embeddings (average for words outside
// the table, zeros for NONE) and freezes them. The model's word width must
// equal the table dimension.
void load_word_embeddings(Model& model, const EmbeddingTable& table);

struct CoverageReport {
  std::size_t dictionary_size = 0;
  std::size_t words = 0;    // distinct word types
  std::size_t unknown = 0;  // types left untranslated by the full backoff
};

CoverageReport coverage_report(const std::vector<Document>& corpus, const BilingualDictionary& dict);
std::string format_coverage(const std::vector<std::pair<std::string, CoverageReport>>& rows);

}  // namespace rst
