#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rst/evaluate/evaluate.hpp"
#include "rst/harmonize/corpus.hpp"
#include "rst/harmonize/pipeline.hpp"
#include "rst/model/training.hpp"

namespace rst::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDataError = 2, kInvariantError = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// language code -> path, from "lang=path" items; later items win.
using LangPaths = std::map<std::string, std::string>;
LangPaths parse_lang_paths(const std::vector<std::string>& items);

std::vector<double> parse_double_list(const std::string& csv);
std::vector<int> parse_int_list(const std::string& csv);

// Turns `key = value` lines into `--key value` arguments. '#' starts a comment.
std::vector<std::string> config_arguments(std::string_view text);

// ---- harmonize ----

struct HarmonizeConfig {
  std::string manifest;
  std::string out_dir;
  std::string name;                  // row label in the stats table
  std::set<std::string> drop_title;  // languages
  std::string mapping;               // empty: builtin table
};

struct HarmonizeSummary {
  CorpusStats stats;
  std::vector<std::pair<std::string, std::string>> skipped;  // id, reason
};

// Writes the harmonized corpus, stats.txt and skipped.txt. Throws DataError
// on an empty manifest or when every document fails.
HarmonizeSummary cmd_harmonize(const HarmonizeConfig& config, std::ostream& out);

// ---- train ----

enum class Mode { Mono, CrossSourceOnly, CrossPlusDev };
Mode parse_mode(std::string_view text);

struct TrainConfig {
  LangPaths corpora;       // harmonized corpus directories
  LangPaths test_ids;      // optional fixed test sets
  LangPaths dictionaries;  // bilingual dictionaries into English
  std::string embeddings;  // optional cross-lingual embedding file
  int embedding_dims = EmbeddingTable::kDefaultDim;
  std::string target;
  std::vector<std::string> sources;  // empty: every corpus but the target
  Mode mode = Mode::Mono;
  GridSpec grid;
  std::optional<Hyperparams> fixed;  // skips the grid
  std::uint64_t seed = 1;
  double init_scale = kDefaultInitScale;
  std::string model_path;   // optional
  std::string report_path;  // optional dev score table
};

struct TrainResult {
  Model model;
  Hyperparams best;
  std::optional<Scores> dev;
  std::string dev_table;
  std::uint32_t checksum = 0;
};

// Mono: target train split, target dev split. Cross source-only: the
// sources' train splits, the sources' dev splits; the target corpus is never
// opened. Cross plus-dev: the sources' train and dev splits plus the target
// train split, the target dev split. Test splits are never used.
TrainResult cmd_train(const TrainConfig& config, std::ostream& log, AccessLog* access = nullptr);

// ---- parse / eval / baseline / oracle-check / coverage ----

struct ParseConfig {
  std::string model_path;
  std::string corpus_dir;
  std::string out_dir;
  std::optional<int> beam;  // default: the model's
  LangPaths dictionaries;
  bool trace = false;
};
void cmd_parse(const ParseConfig& config, std::ostream& out);

Scores cmd_eval(const std::string& pred_dir, const std::string& gold_dir, std::ostream& out);

struct BaselineConfig {
  std::string corpus_dir;
  std::string test_ids;  // optional
  std::uint64_t seed = 1;
  std::string out_dir;   // optional
};
Scores cmd_baseline(const BaselineConfig& config, std::ostream& out);

// Returns the number of documents whose oracle does not round-trip.
int cmd_oracle_check(const std::string& corpus_dir, std::ostream& out);

void cmd_coverage(const LangPaths& corpora, const LangPaths& dictionaries, std::ostream& out);

// Entry point of the rstparse tool; returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rst::cli
