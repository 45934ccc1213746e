#pragma once

#include <ostream>
#include <vector>

#include "rst/model/model.hpp"

namespace rst {

struct ParseResult {
  RstTree tree;
  std::vector<Action> actions;
  double log_prob = 0.0;
};

// Action-synchronous beam search: every step extends each item by each legal
// action, then keeps the `beam` best by cumulative log-probability, ties
// going to the lower action index, then to the earlier item. Runs exactly
// 2n-1 steps. With `trace`, writes the beam after each step.
ParseResult parse(const EncodedDocument& doc, const Model& model, int beam, std::ostream* trace = nullptr);

ParseResult parse(const Document& doc, const Model& model, int beam, const Lexicon& lexicon,
                  const WordFn& word = default_word, std::ostream* trace = nullptr);

// Picks the most probable legal action at every step.
ParseResult parse_greedy(const EncodedDocument& doc, const Model& model);

// Sum of log P of `actions` taken from the initial configuration.
double sequence_log_prob(const EncodedDocument& doc, const Model& model, const std::vector<Action>& actions);

}  // namespace rst
