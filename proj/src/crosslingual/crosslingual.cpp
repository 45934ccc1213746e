#include "rst/crosslingual/crosslingual.hpp"

#include <charconv>
#include <cstdio>
#include <set>
#include <sstream>

#include "rst/error.hpp"
#include "rst/text.hpp"

namespace rst {

BilingualDictionary BilingualDictionary::from_text(std::string_view tsv) {
  BilingualDictionary d;
  std::size_t line_no = 0;
  for (const auto& line : text::split(tsv, '\n')) {
    ++line_no;
    std::string_view l = line;
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    if (text::trim(l).empty() || l.front() == '#') continue;
    auto cols = text::split(l, '\t');
    if (cols.size() < 2) throw ParseError("expected source<TAB>english", line_no);
    d.add(text::trim(cols[0]), text::trim(cols[1]));
  }
  return d;
}

BilingualDictionary BilingualDictionary::from_file(const std::string& path) {
  return from_text(text::read_file(path));
}

void BilingualDictionary::add(std::string_view source, std::string_view english) {
  if (source.empty() || english.empty()) return;
  const std::string s = text::nfc(source);
  entries_.emplace(s, std::string(english));
  lowered_.emplace(text::to_lower(s), std::string(english));
}

std::optional<std::string> BilingualDictionary::lookup(std::string_view word) const {
  if (word.empty()) return std::nullopt;
  const std::string w = text::nfc(word);
  if (auto it = entries_.find(w); it != entries_.end()) return it->second;
  if (auto it = lowered_.find(text::to_lower(w)); it != lowered_.end()) return it->second;
  return std::nullopt;
}

std::string translate(std::string_view token, std::string_view lemma, const std::optional<std::string>& stem,
                      const BilingualDictionary& dict) {
  if (auto t = dict.lookup(token)) return *t;
  if (auto t = dict.lookup(lemma)) return *t;
  if (stem)
    if (auto t = dict.lookup(*stem)) return *t;
  return std::string(token);
}

WordFn translating_word(const BilingualDictionary& dict) {
  return [&dict](const Token& t) { return text::to_lower(translate(t.form, t.lemma, std::nullopt, dict)); };
}

// ---- Embeddings ----

EmbeddingTable::EmbeddingTable(std::vector<std::string> words, Eigen::MatrixXd vectors)
    : words_(std::move(words)), vectors_(std::move(vectors)) {
  if (static_cast<Eigen::Index>(words_.size()) != vectors_.rows())
    throw InvariantError("embedding table rows do not match its words");
  for (std::size_t i = 0; i < words_.size(); ++i) index_.emplace(words_[i], static_cast<int>(i));
  average_ = words_.empty() ? Eigen::VectorXd::Zero(vectors_.cols())
                            : Eigen::VectorXd(vectors_.colwise().mean().transpose());
}

EmbeddingTable EmbeddingTable::from_text(std::string_view content, int keep_dims) {
  auto lines = text::split(content, '\n');
  if (lines.empty()) throw ParseError("empty embedding file", 1);
  auto header = text::split_ws(lines[0]);
  if (header.size() != 2) throw ParseError("expected '<vocab_size> <dim>'", 1);
  const int rows = std::stoi(header[0]);
  const int dim = std::stoi(header[1]);
  if (keep_dims < 1 || keep_dims > dim)
    throw DataError("cannot keep " + std::to_string(keep_dims) + " of " + std::to_string(dim) + " dimensions");

  std::vector<std::string> words;
  Eigen::MatrixXd vectors(rows, keep_dims);
  for (std::size_t ln = 1; ln < lines.size(); ++ln) {
    if (text::trim(lines[ln]).empty()) continue;
    auto cols = text::split_ws(lines[ln]);
    if (static_cast<int>(cols.size()) != dim + 1)
      throw ParseError("expected a word and " + std::to_string(dim) + " values", ln + 1);
    if (static_cast<int>(words.size()) == rows) throw ParseError("more rows than the header declares", ln + 1);
    const auto r = static_cast<Eigen::Index>(words.size());
    for (int j = 0; j < keep_dims; ++j) {
      const std::string& v = cols[j + 1];
      double x = 0.0;
      auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
      if (ec != std::errc() || ptr != v.data() + v.size()) throw ParseError("bad number '" + v + "'", ln + 1);
      vectors(r, j) = x;
    }
    words.push_back(cols[0]);
  }
  if (static_cast<int>(words.size()) != rows)
    throw DataError("embedding file declares " + std::to_string(rows) + " rows but has " +
                    std::to_string(words.size()));
  return EmbeddingTable(std::move(words), std::move(vectors));
}

EmbeddingTable EmbeddingTable::from_file(const std::string& path, int keep_dims) {
  return from_text(text::read_file(path), keep_dims);
}

std::string EmbeddingTable::to_text() const {
  std::string out = std::to_string(words_.size()) + " " + std::to_string(dim()) + "\n";
  char buf[32];
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out += words_[i];
    for (int j = 0; j < dim(); ++j) {
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, vectors_(static_cast<Eigen::Index>(i), j));
      out += ' ';
      out.append(buf, ptr);
    }
    out += '\n';
  }
  return out;
}

Eigen::VectorXd EmbeddingTable::embed(std::string_view word) const {
  if (auto it = index_.find(word); it != index_.end()) return vectors_.row(it->second).transpose();
  return average_;
}

Eigen::VectorXd edu_word_vector(const EduSymbols& edu, const EmbeddingTable& table) {
  const int d = table.dim();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(kWordsPerEdu * d);
  for (int i = 0; i < kWordsPerEdu; ++i)
    if (edu[i] != kNone) out.segment(i * d, d) = table.embed(edu[i]);
  return out;
}

Vocabularies with_embedding_vocabulary(Vocabularies vocab, const EmbeddingTable& table) {
  for (const auto& w : table.words()) vocab[static_cast<int>(SymbolType::Word)].add(w);
  return vocab;
}

void load_word_embeddings(Model& model, const EmbeddingTable& table) {
  const int word = static_cast<int>(SymbolType::Word);
  if (model.dims().width[word] != table.dim())
    throw DataError("model word width " + std::to_string(model.dims().width[word]) +
                    " differs from the embedding dimension " + std::to_string(table.dim()));
  Eigen::MatrixXd& e = model.params().embedding[word];
  const auto& items = model.vocab()[word].items();
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    if (static_cast<int>(i) == Vocabulary::kNoneId)
      e.row(r).setZero();
    else
      e.row(r) = table.embed(items[i]).transpose();
  }
  model.set_frozen_words(true);
}

CoverageReport coverage_report(const std::vector<Document>& corpus, const BilingualDictionary& dict) {
  std::set<std::string> types;
  std::set<std::string> known;
  for (const auto& doc : corpus)
    for (const auto& t : doc.tokens) {
      types.insert(t.form);
      if (dict.lookup(t.form) || dict.lookup(t.lemma)) known.insert(t.form);
    }
  return CoverageReport{dict.size(), types.size(), types.size() - known.size()};
}

std::string format_coverage(const std::vector<std::pair<std::string, CoverageReport>>& rows) {
  std::string out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-10s %12s %10s %14s\n", "Corpus", "Size dict.", "# words", "# unk. words");
  out += buf;
  for (const auto& [name, r] : rows) {
    std::snprintf(buf, sizeof buf, "%-10s %12zu %10zu %14zu\n", name.c_str(), r.dictionary_size, r.words,
                  r.unknown);
    out += buf;
  }
  return out;
}

}  // namespace rst
