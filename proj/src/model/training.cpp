#include "rst/model/training.hpp"

#include <algorithm>
#include <cstdio>

#include "rst/decode/beam.hpp"
#include "rst/error.hpp"

namespace rst {

DocumentFeatures FeatureExtractor::operator()(const Document& doc) const {
  auto it = lexicons_.find(doc.language);
  if (it == lexicons_.end()) it = lexicons_.emplace(doc.language, Lexicon::builtin(doc.language)).first;
  auto w = words_.find(doc.language);
  return DocumentFeatures(doc, it->second, w == words_.end() ? default_ : w->second);
}

std::vector<SymbolSequence> oracle_symbols(const Document& doc, const DocumentFeatures& features) {
  if (!doc.gold) throw DataError("document '" + doc.id + "' has no gold tree");
  std::vector<SymbolSequence> out;
  Configuration c = initial_config(doc.edu_count());
  for (const auto& a : oracle(*doc.gold)) {
    out.push_back(config_symbols(c, features));
    c = c.apply(a);
  }
  return out;
}

std::vector<Example> oracle_examples(const Model& model, const Document& doc, const DocumentFeatures& features) {
  if (!doc.gold) throw DataError("document '" + doc.id + "' has no gold tree");
  const EncodedDocument encoded = model.encode(features);
  std::vector<Example> out;
  Configuration c = initial_config(doc.edu_count());
  for (const auto& a : oracle(*doc.gold)) {
    if (auto idx = model.actions().index_of(a)) out.push_back(Example{model.input(c, encoded), static_cast<int>(*idx)});
    c = c.apply(a);
  }
  return out;
}

Model initial_model(const std::vector<Document>& train, const FeatureExtractor& extract, Dimensions dims,
                    std::uint64_t seed, const EmbeddingTable* embeddings, double init_scale) {
  std::vector<RstTree> trees;
  std::vector<SymbolSequence> inputs;
  for (const auto& doc : train) {
    if (!doc.gold) throw DataError("training document '" + doc.id + "' has no gold tree");
    trees.push_back(*doc.gold);
    auto seqs = oracle_symbols(doc, extract(doc));
    inputs.insert(inputs.end(), seqs.begin(), seqs.end());
  }
  ActionSet actions = ActionSet::induce(trees);
  Vocabularies vocab = build_vocabularies(inputs, actions);
  if (embeddings) {
    vocab = with_embedding_vocabulary(std::move(vocab), *embeddings);
    dims.width[static_cast<int>(SymbolType::Word)] = embeddings->dim();
  }
  Model model(std::move(vocab), std::move(actions), dims, seed, init_scale);
  if (embeddings) load_word_embeddings(model, *embeddings);
  return model;
}

GridSpec::GridSpec() {
  for (int e = 1; e <= 20; ++e) epochs.push_back(e);
}

bool better(const GridPoint& a, const GridPoint& b) {
  if (a.dev.relation != b.dev.relation) return a.dev.relation > b.dev.relation;
  if (a.dev.nuclearity != b.dev.nuclearity) return a.dev.nuclearity > b.dev.nuclearity;
  if (a.dev.span != b.dev.span) return a.dev.span > b.dev.span;
  return a.hp.beam < b.hp.beam;
}

Scores evaluate_model(const Model& model, const std::vector<EncodedDocument>& docs,
                      const std::vector<RstTree>& gold, int beam) {
  std::vector<RstTree> pred;
  pred.reserve(docs.size());
  for (const auto& d : docs) pred.push_back(parse(d, model, beam).tree);
  return score(pred, gold);
}

GridResult grid_search(const Model& initial, const std::vector<Example>& train,
                       const std::vector<EncodedDocument>& dev, const std::vector<RstTree>& dev_gold,
                       const GridSpec& grid, const std::function<void(const std::string&)>& log) {
  if (grid.size() == 0) throw DataError("empty hyperparameter grid");
  if (dev.empty()) throw DataError("grid search needs a development set");
  const int max_epochs = *std::max_element(grid.epochs.begin(), grid.epochs.end());

  std::optional<GridResult> result;
  std::vector<GridPoint> points;
  for (double lr : grid.learning_rates)
    for (double decay : grid.decays) {
      TrainOptions opt;
      opt.learning_rate = lr;
      opt.decay = decay;
      opt.epochs = max_epochs;
      opt.seed = grid.seed;
      opt.on_epoch = [&](int epoch, const Model& averaged, double mean_loss) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "lr=%g decay=%g epoch=%d loss=%.6f", lr, decay, epoch, mean_loss);
        std::string line = buf;
        const bool checkpoint = std::find(grid.epochs.begin(), grid.epochs.end(), epoch) != grid.epochs.end();
        for (int beam : checkpoint ? grid.beams : std::vector<int>{}) {
          GridPoint point{Hyperparams{lr, decay, epoch, beam, grid.seed}, evaluate_model(averaged, dev, dev_gold, beam)};
          points.push_back(point);
          line += " | beam=" + std::to_string(beam) + " " + format_scores(point.dev);
          if (!result || better(point, result->best)) {
            Model chosen = averaged;
            chosen.set_hyperparams(point.hp);
            result = GridResult{std::move(chosen), point, {}};
          }
        }
        if (log) log(line);
      };
      rst::train(initial, train, opt);
    }
  result->points = std::move(points);
  return std::move(*result);
}

}  // namespace rst
