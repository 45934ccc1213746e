#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rst/crosslingual/crosslingual.hpp"
#include "rst/evaluate/evaluate.hpp"
#include "rst/model/model.hpp"

namespace rst {

// Computes DocumentFeatures with the builtin lexicon of each document's
// language and a word function chosen per language.
class FeatureExtractor {
 public:
  explicit FeatureExtractor(WordFn word = default_word) : default_(std::move(word)) {}
  void set_word(const std::string& language, WordFn word) { words_[language] = std::move(word); }
  DocumentFeatures operator()(const Document& doc) const;

 private:
  WordFn default_;
  std::map<std::string, WordFn> words_;
  mutable std::map<std::string, Lexicon> lexicons_;
};

// Symbols of every configuration along the oracle path of the gold tree.
std::vector<SymbolSequence> oracle_symbols(const Document& doc, const DocumentFeatures& features);

// Training examples along the oracle path. Actions missing from the model's
// action set are skipped.
std::vector<Example> oracle_examples(const Model& model, const Document& doc, const DocumentFeatures& features);

// Action set and vocabularies from the training documents; with `embeddings`
// the word table is loaded from them and frozen.
Model initial_model(const std::vector<Document>& train, const FeatureExtractor& extract, Dimensions dims,
                    std::uint64_t seed, const EmbeddingTable* embeddings = nullptr,
                    double init_scale = kDefaultInitScale);

struct GridSpec {
  std::vector<double> learning_rates{0.01, 0.02, 0.03};
  std::vector<double> decays{1e-5, 1e-6, 1e-7, 0.0};
  std::vector<int> epochs;  // default 1..20
  std::vector<int> beams{1, 2, 4, 8, 16, 32};
  std::uint64_t seed = 1;

  GridSpec();
  std::size_t size() const { return learning_rates.size() * decays.size() * epochs.size() * beams.size(); }
};

struct GridPoint {
  Hyperparams hp;
  Scores dev;
};

struct GridResult {
  Model model;
  GridPoint best;
  std::vector<GridPoint> points;
};

// True if `a` beats `b`: higher Relation, then Nuclearity, then Span, then
// the smaller beam.
bool better(const GridPoint& a, const GridPoint& b);

// One training run per (learning rate, decay) up to the largest epoch
// count, checkpointing the averaged model at every listed epoch and parsing
// the dev set with every beam width. `log` receives one line per epoch.
GridResult grid_search(const Model& initial, const std::vector<Example>& train,
                       const std::vector<EncodedDocument>& dev, const std::vector<RstTree>& dev_gold,
                       const GridSpec& grid, const std::function<void(const std::string&)>& log = {});

// Parses every document and scores against the gold trees.
Scores evaluate_model(const Model& model, const std::vector<EncodedDocument>& docs,
                      const std::vector<RstTree>& gold, int beam);

}  // namespace rst
