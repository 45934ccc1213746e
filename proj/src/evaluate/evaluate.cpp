#include "rst/evaluate/evaluate.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "rst/error.hpp"
#include "rst/model/model.hpp"

namespace rst {

std::vector<Constituent> constituents(const RstTree& tree) {
  std::vector<Constituent> out;
  for (const RstNode* node : internal_nodes(tree.root()))
    out.push_back({node->span(), node->label().nuclearity, node->label().relation});
  return out;
}

MatchCounts count_matches(const RstTree& pred, const RstTree& gold) {
  if (pred.edu_count() != gold.edu_count())
    throw DataError("predicted tree covers " + std::to_string(pred.edu_count()) + " EDUs, gold " +
                    std::to_string(gold.edu_count()));
  const auto p = constituents(pred);
  const auto g = constituents(gold);
  std::map<Span, const Constituent*> by_span;
  for (const auto& c : g) by_span[c.span] = &c;
  MatchCounts m;
  m.predicted = static_cast<long>(p.size());
  m.gold = static_cast<long>(g.size());
  for (const auto& c : p) {
    auto it = by_span.find(c.span);
    if (it == by_span.end()) continue;
    ++m.span;
    if (it->second->nuclearity != c.nuclearity) continue;
    ++m.nuclearity;
    if (it->second->relation == c.relation) ++m.relation;
  }
  return m;
}

Scores f1_scores(const MatchCounts& m) {
  auto f1 = [&](long hits) {
    if (m.predicted == 0 && m.gold == 0) return 100.0;
    if (hits == 0) return 0.0;
    const double p = static_cast<double>(hits) / m.predicted;
    const double r = static_cast<double>(hits) / m.gold;
    return 100.0 * 2.0 * p * r / (p + r);
  };
  return Scores{f1(m.span), f1(m.nuclearity), f1(m.relation)};
}

Scores score(const std::vector<RstTree>& pred, const std::vector<RstTree>& gold) {
  if (pred.size() != gold.size())
    throw DataError(std::to_string(pred.size()) + " predicted trees for " + std::to_string(gold.size()) +
                    " gold trees");
  MatchCounts total;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    const MatchCounts m = count_matches(pred[i], gold[i]);
    total.span += m.span;
    total.nuclearity += m.nuclearity;
    total.relation += m.relation;
    total.predicted += m.predicted;
    total.gold += m.gold;
  }
  return f1_scores(total);
}

std::string format_scores(const Scores& s) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "span=%.2f nuc=%.2f rel=%.2f", s.span, s.nuclearity, s.relation);
  return buf;
}

std::string format_score_table(const std::vector<std::pair<std::string, Scores>>& rows) {
  std::size_t width = 6;
  for (const auto& [name, s] : rows) width = std::max(width, name.size());
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-*s %8s %8s %8s\n", static_cast<int>(width), "", "Span", "Nuc", "Rel");
  out += buf;
  for (const auto& [name, s] : rows) {
    std::snprintf(buf, sizeof buf, "%-*s %8.2f %8.2f %8.2f\n", static_cast<int>(width), name.c_str(),
                  s.span, s.nuclearity, s.relation);
    out += buf;
  }
  return out;
}

RstTree right_branching(int n, Label label) {
  if (n < 1) throw DataError("cannot build a tree over no EDUs");
  NodePtr acc = RstNode::leaf(n - 1);
  for (int i = n - 2; i >= 0; --i) acc = RstNode::internal(RstNode::leaf(i), acc, label);
  return RstTree(acc);
}

RstTree mfs_baseline(const Document& doc, Label label) { return right_branching(doc.edu_count(), label); }

Label most_frequent_label(const std::vector<RstTree>& trees) {
  std::map<std::string, std::pair<long, Label>> counts;
  for (const auto& t : trees)
    for (const RstNode* node : internal_nodes(t.root())) {
      auto& entry = counts[to_string(node->label())];
      ++entry.first;
      entry.second = node->label();
    }
  if (counts.empty()) throw DataError("no internal node to count labels on");
  const std::pair<long, Label>* best = nullptr;
  for (const auto& [name, entry] : counts)  // printed-name order
    if (!best || entry.first > best->first) best = &entry;
  return best->second;
}

namespace {

Split assign(const std::vector<std::size_t>& rest_shuffled, std::vector<std::size_t> test) {
  Split s;
  s.test = std::move(test);
  if (rest_shuffled.size() - std::min(rest_shuffled.size(), kDevDocs) >= kMinTrainDocs) {
    s.dev.assign(rest_shuffled.begin(), rest_shuffled.begin() + kDevDocs);
    s.train.assign(rest_shuffled.begin() + kDevDocs, rest_shuffled.end());
  } else {
    s.dev = rest_shuffled;
  }
  for (auto* part : {&s.train, &s.dev, &s.test}) std::sort(part->begin(), part->end());
  return s;
}

}  // namespace

Split split_corpus(std::size_t n, std::uint64_t seed) {
  if (n < kTestDocs + 1)
    throw DataError("splitting needs at least " + std::to_string(kTestDocs + 1) + " documents, got " +
                    std::to_string(n));
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  seeded_shuffle(order, seed);
  std::vector<std::size_t> test(order.begin(), order.begin() + kTestDocs);
  return assign(std::vector<std::size_t>(order.begin() + kTestDocs, order.end()), std::move(test));
}

Split split_corpus(const std::vector<std::string>& ids, std::uint64_t seed,
                   const std::vector<std::string>& test_ids) {
  std::vector<std::size_t> test;
  std::vector<bool> is_test(ids.size(), false);
  for (const auto& id : test_ids) {
    auto it = std::find(ids.begin(), ids.end(), id);
    if (it == ids.end()) throw DataError("test document '" + id + "' is not in the corpus");
    const auto i = static_cast<std::size_t>(it - ids.begin());
    if (!is_test[i]) test.push_back(i);
    is_test[i] = true;
  }
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (!is_test[i]) rest.push_back(i);
  if (rest.empty()) throw DataError("no documents left outside the test set");
  std::vector<std::size_t> perm(rest.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  seeded_shuffle(perm, seed);
  std::vector<std::size_t> shuffled;
  for (std::size_t i : perm) shuffled.push_back(rest[i]);
  return assign(shuffled, std::move(test));
}

}  // namespace rst
