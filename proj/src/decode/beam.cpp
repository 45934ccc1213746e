#include "rst/decode/beam.hpp"

#include <algorithm>
#include <memory>

#include "rst/error.hpp"

namespace rst {
namespace {

struct History {
  std::size_t action;
  std::shared_ptr<const History> prev;
};

struct Item {
  Configuration config;
  double score;
  std::shared_ptr<const History> history;
};

struct Candidate {
  double score;
  std::size_t action;
  std::size_t item;
};

std::vector<Action> unwind(const ActionSet& actions, const History* h) {
  std::vector<Action> out;
  for (; h; h = h->prev.get()) out.push_back(actions[h->action]);
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

ParseResult parse(const EncodedDocument& doc, const Model& model, int beam, std::ostream* trace) {
  const int n = static_cast<int>(doc.edus.size());
  if (n < 1) throw DataError("cannot parse a document without EDUs");
  if (beam < 1) throw InvariantError("beam width must be at least 1");
  const ActionSet& actions = model.actions();

  std::vector<Item> items{Item{initial_config(n), 0.0, nullptr}};
  std::vector<Candidate> candidates;
  for (int step = 0; step < 2 * n - 1; ++step) {
    candidates.clear();
    for (std::size_t i = 0; i < items.size(); ++i) {
      const Configuration& c = items[i].config;
      const Eigen::VectorXd logp = model.log_probabilities(model.input(c, doc));
      for (std::size_t a = 0; a < actions.size(); ++a)
        if (is_legal(c, actions[a])) candidates.push_back({items[i].score + logp(a), a, i});
    }
    if (candidates.empty()) throw InvariantError("no legal action: the model has no REDUCE labels");
    const std::size_t keep = std::min<std::size_t>(beam, candidates.size());
    std::partial_sort(candidates.begin(), candidates.begin() + keep, candidates.end(),
                      [](const Candidate& x, const Candidate& y) {
                        if (x.score != y.score) return x.score > y.score;
                        if (x.action != y.action) return x.action < y.action;
                        return x.item < y.item;
                      });
    std::vector<Item> next;
    next.reserve(keep);
    for (std::size_t k = 0; k < keep; ++k) {
      const Candidate& cand = candidates[k];
      const Item& from = items[cand.item];
      next.push_back(Item{from.config.apply(actions[cand.action]), cand.score,
                          std::make_shared<const History>(History{cand.action, from.history})});
    }
    items = std::move(next);
    if (trace) {
      *trace << "step " << step + 1 << '\n';
      for (const auto& item : items)
        *trace << "  " << item.score << '\t' << to_string(actions[item.history->action]) << '\n';
    }
  }
  const Item& best = items.front();
  return ParseResult{RstTree(best.config.stack_nodes().front()), unwind(actions, best.history.get()),
                     best.score};
}

ParseResult parse(const Document& doc, const Model& model, int beam, const Lexicon& lexicon,
                  const WordFn& word, std::ostream* trace) {
  return parse(model.encode(DocumentFeatures(doc, lexicon, word)), model, beam, trace);
}

ParseResult parse_greedy(const EncodedDocument& doc, const Model& model) {
  const int n = static_cast<int>(doc.edus.size());
  if (n < 1) throw DataError("cannot parse a document without EDUs");
  const ActionSet& actions = model.actions();
  Configuration c = initial_config(n);
  ParseResult out{RstTree(RstNode::leaf(0)), {}, 0.0};
  while (!c.is_final()) {
    const Eigen::VectorXd logp = model.log_probabilities(model.input(c, doc));
    std::size_t best = actions.size();
    for (std::size_t a = 0; a < actions.size(); ++a)
      if (is_legal(c, actions[a]) && (best == actions.size() || logp(a) > logp(best))) best = a;
    if (best == actions.size()) throw InvariantError("no legal action: the model has no REDUCE labels");
    out.actions.push_back(actions[best]);
    out.log_prob += logp(best);
    c = c.apply(actions[best]);
  }
  out.tree = RstTree(c.stack_nodes().front());
  return out;
}

double sequence_log_prob(const EncodedDocument& doc, const Model& model, const std::vector<Action>& seq) {
  Configuration c = initial_config(static_cast<int>(doc.edus.size()));
  double total = 0.0;
  for (const auto& a : seq) {
    auto idx = model.actions().index_of(a);
    if (!idx) throw DataError("action " + to_string(a) + " is not in the model's action set");
    total += model.log_probabilities(model.input(c, doc))(*idx);
    c = c.apply(a);
  }
  return total;
}

}  // namespace rst
