#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rst/features/features.hpp"
#include "rst/transition/transition.hpp"

namespace rst {

// Symbol value -> row. Row 0 is NONE (always the zero vector), row 1 UNK.
class Vocabulary {
 public:
  static constexpr int kNoneId = 0;
  static constexpr int kUnkId = 1;

  Vocabulary();
  int add(const std::string& value);
  int id(std::string_view value) const;  // kUnkId when unseen
  std::optional<int> find(std::string_view value) const;
  int size() const noexcept { return static_cast<int>(items_.size()); }
  const std::vector<std::string>& items() const noexcept { return items_; }

 private:
  std::vector<std::string> items_;
  std::map<std::string, int, std::less<>> ids_;
};

using Vocabularies = std::array<Vocabulary, kSymbolTypeCount>;

struct Dimensions {
  // Embedding width per SymbolType: word, pos, position, length, flag, label.
  std::array<int, kSymbolTypeCount> width{50, 16, 6, 4, 2, 50};
  int hidden1 = 128;
  int hidden2 = 128;

  int input_width() const;
  friend bool operator==(const Dimensions&, const Dimensions&) = default;
};

struct Parameters {
  std::array<Eigen::MatrixXd, kSymbolTypeCount> embedding;  // rows = vocabulary entries
  Eigen::MatrixXd w1, w2, wo;
  Eigen::VectorXd b1, b2, bo;

  // Every block zero, same shapes as `like`.
  static Parameters zeros_like(const Parameters& like);
  // Number of blocks (6 embedding tables, then w1 b1 w2 b2 wo bo) and access
  // to them as flat arrays.
  static constexpr int kBlockCount = 12;
  static std::string_view block_name(int block);
  Eigen::Map<Eigen::VectorXd> block(int block);
  Eigen::Map<const Eigen::VectorXd> block(int block) const;
};

using InputIds = std::array<int, kSequenceLength>;

// Symbol ids of every EDU of a document, for fast slot assembly.
struct EncodedDocument {
  std::vector<std::array<int, edu_slot::kCount>> edus;
};

struct Hyperparams {
  double learning_rate = 0.01;
  double decay = 0.0;
  int epochs = 10;
  int beam = 1;
  std::uint64_t seed = 1;

  std::string to_string() const;
  friend bool operator==(const Hyperparams&, const Hyperparams&) = default;
};

// Half-width of the uniform initialization of embeddings and weights.
inline constexpr double kDefaultInitScale = 0.3;

class Model {
 public:
  Model() = default;
  // Parameters drawn uniformly from [-init_scale, init_scale]; biases zero.
  Model(Vocabularies vocab, ActionSet actions, Dimensions dims, std::uint64_t seed,
        double init_scale = kDefaultInitScale);

  const Vocabularies& vocab() const noexcept { return vocab_; }
  const ActionSet& actions() const noexcept { return actions_; }
  const Dimensions& dims() const noexcept { return dims_; }
  Parameters& params() noexcept { return params_; }
  const Parameters& params() const noexcept { return params_; }

  // Word embeddings come from a fixed table and are not trained.
  bool frozen_words() const noexcept { return frozen_words_; }
  void set_frozen_words(bool frozen) noexcept { frozen_words_ = frozen; }
  const Hyperparams& hyperparams() const noexcept { return hyper_; }
  void set_hyperparams(const Hyperparams& hp) { hyper_ = hp; }
  const std::string& template_version() const noexcept { return template_; }
  void set_template_version(std::string v) { template_ = std::move(v); }

  InputIds encode(const SymbolSequence& symbols) const;
  EncodedDocument encode(const DocumentFeatures& features) const;
  InputIds input(const Configuration& c, const EncodedDocument& doc) const;

  // Softmax over the whole action set.
  Eigen::VectorXd probabilities(const InputIds& x) const;
  Eigen::VectorXd log_probabilities(const InputIds& x) const;

 private:
  Vocabularies vocab_;
  ActionSet actions_;
  Dimensions dims_;
  Parameters params_;
  Hyperparams hyper_;
  bool frozen_words_ = false;
  std::string template_{rst::template_version()};
};

// Builds vocabularies from training inputs. Label values come from the
// action set so every label a parser can build has a row.
Vocabularies build_vocabularies(const std::vector<SymbolSequence>& inputs, const ActionSet& actions);

struct Example {
  InputIds x;
  int gold = 0;
};

// Mean negative log-likelihood of the gold actions.
double loss(const Model& model, const std::vector<Example>& batch);

// Gradient of loss() with respect to every parameter block. The NONE row
// never receives gradient.
Parameters gradient(const Model& model, const std::vector<Example>& batch);

// Learning rate after t updates (t from 0).
double learning_rate(double eta0, double decay, long t);

struct TrainOptions {
  double learning_rate = 0.01;
  double decay = 0.0;
  int epochs = 10;
  std::uint64_t seed = 1;
  // Called after each epoch with the averaged model so far and the mean
  // training loss of that epoch.
  std::function<void(int epoch, const Model& averaged, double mean_loss)> on_epoch;
};

// Per-example SGD in a seeded shuffled order; returns the average of the
// parameters after every update. Throws DataError on an empty corpus.
Model train(const Model& initial, const std::vector<Example>& examples, const TrainOptions& options);

// Share of examples whose highest-probability action is the gold one.
double action_accuracy(const Model& model, const std::vector<Example>& examples);

// Binary model file with a trailing crc32. Loading throws DataError on a
// bad magic string, version, checksum or template.
std::string serialize(const Model& model);
Model deserialize(std::string_view bytes);
void save_model(const Model& model, const std::string& path);
Model load_model(const std::string& path);
std::uint32_t model_checksum(const Model& model);

// Deterministic Fisher-Yates shuffle over a 64-bit Mersenne Twister.
void seeded_shuffle(std::vector<std::size_t>& items, std::uint64_t seed);

}  // namespace rst
