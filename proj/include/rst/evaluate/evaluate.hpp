#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "rst/core/document.hpp"

namespace rst {

struct Constituent {
  Span span;
  Nuclearity nuclearity;
  Relation relation;
  friend auto operator<=>(const Constituent&, const Constituent&) = default;
};

// Every internal node, root included.
std::vector<Constituent> constituents(const RstTree& tree);

struct MatchCounts {
  long span = 0;
  long nuclearity = 0;
  long relation = 0;
  long predicted = 0;
  long gold = 0;
};

MatchCounts count_matches(const RstTree& pred, const RstTree& gold);

struct Scores {
  double span = 0.0;
  double nuclearity = 0.0;
  double relation = 0.0;
};

Scores f1_scores(const MatchCounts& counts);

// Micro-averaged F1 (in percent) over all documents. Throws DataError on
// list-size or EDU-count mismatches.
Scores score(const std::vector<RstTree>& pred, const std::vector<RstTree>& gold);

// "span=85.00 nuc=72.30 rel=60.10"
std::string format_scores(const Scores& s);
// Aligned table with one row per name.
std::string format_score_table(const std::vector<std::pair<std::string, Scores>>& rows);

// Right-branching tree over n EDUs with every node labeled `label`.
RstTree right_branching(int n_edus, Label label);
RstTree mfs_baseline(const Document& doc, Label label);

// Most frequent label over all internal nodes; ties go to the label that
// prints first. Throws DataError when there is no internal node.
Label most_frequent_label(const std::vector<RstTree>& trees);

struct Split {
  std::vector<std::size_t> train, dev, test;  // indices into the input
};

// Seeded shuffle, 38 test documents, then 25 dev if at least 100 would be
// left for training, else every remaining document is dev. Throws DataError below 39.
Split split_corpus(std::size_t n_docs, std::uint64_t seed);

// As above with a fixed test set (e.g. an official one); `test_ids` must
// all be among `ids`.
Split split_corpus(const std::vector<std::string>& ids, std::uint64_t seed,
                   const std::vector<std::string>& test_ids);

inline constexpr std::size_t kTestDocs = 38;
inline constexpr std::size_t kDevDocs = 25;
inline constexpr std::size_t kMinTrainDocs = 100;

}  // namespace rst
