#include <doctest.h>

#include <algorithm>
#include <map>

#include "generators.hpp"
#include "rst/error.hpp"
#include "rst/evaluate/evaluate.hpp"

using namespace rst;

namespace {

// Independent scorer: string keys per internal node, counted by hand.
void keys(const RstNode& n, std::vector<std::string>& span, std::vector<std::string>& nuc,
          std::vector<std::string>& rel) {
  if (n.is_leaf()) return;
  const Span s = span_of(n);
  const std::string k = std::to_string(s.begin) + ":" + std::to_string(s.end);
  span.push_back(k);
  nuc.push_back(k + ":" + std::string(to_string(n.label().nuclearity)));
  rel.push_back(k + ":" + to_string(n.label()));
  keys(n.left(), span, nuc, rel);
  keys(n.right(), span, nuc, rel);
}

long overlap(std::vector<std::string> a, std::vector<std::string> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<std::string> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return static_cast<long>(common.size());
}

Scores reference_score(const std::vector<RstTree>& pred, const std::vector<RstTree>& gold) {
  long m[3] = {0, 0, 0}, np = 0, ng = 0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    std::vector<std::string> p[3], g[3];
    keys(pred[i].root(), p[0], p[1], p[2]);
    keys(gold[i].root(), g[0], g[1], g[2]);
    for (int k = 0; k < 3; ++k) m[k] += overlap(p[k], g[k]);
    np += static_cast<long>(p[0].size());
    ng += static_cast<long>(g[0].size());
  }
  auto f1 = [&](long hits) {
    if (hits == 0) return 0.0;
    const double pr = static_cast<double>(hits) / np, rc = static_cast<double>(hits) / ng;
    return 100.0 * 2 * pr * rc / (pr + rc);
  };
  return {f1(m[0]), f1(m[1]), f1(m[2])};
}

}  // namespace

TEST_CASE("a tree scored against itself") {
  testing::Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const RstTree t = testing::random_tree(rng, testing::uniform_int(rng, 2, 60));
    const Scores s = score({t}, {t});
    CHECK(s.span == 100.0);
    CHECK(s.nuclearity == 100.0);
    CHECK(s.relation == 100.0);
  }
}

TEST_CASE("nested metrics on perturbed pairs") {
  testing::Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    const RstTree gold = testing::random_tree(rng, testing::uniform_int(rng, 2, 40));
    const RstTree pred = testing::perturb(rng, gold);
    const Scores s = score({pred}, {gold});
    CHECK(s.relation <= s.nuclearity);
    CHECK(s.nuclearity <= s.span);
    const Scores r = reference_score({pred}, {gold});
    CHECK(s.span == doctest::Approx(r.span).epsilon(1e-12));
    CHECK(s.nuclearity == doctest::Approx(r.nuclearity).epsilon(1e-12));
    CHECK(s.relation == doctest::Approx(r.relation).epsilon(1e-12));
  }
}

TEST_CASE("consumer spending examples") {
  const RstTree gold = testing::consumer_spending_tree();
  SUBCASE("relation swapped") {
    const RstTree pred = parse_bracketed("(NS-Attribution (NN-Joint (EDU 1) (EDU 2)) (EDU 3))");
    const Scores s = score({pred}, {gold});
    CHECK(s.span == 100.0);
    CHECK(s.nuclearity == 100.0);
    CHECK(s.relation == 50.0);
  }
  SUBCASE("right-branching baseline") {
    // Gold: [1,3] NS-Attribution, [1,2] NN-Comparison.
    // Pred: [1,3] NS-Elaboration, [2,3] NS-Elaboration.
    // Only the root span matches, with the same nuclearity.
    const RstTree pred = right_branching(3, Label{Nuclearity::NS, Relation::Elaboration});
    CHECK(to_bracketed(pred.root()) == "(NS-Elaboration (EDU 1) (NS-Elaboration (EDU 2) (EDU 3)))");
    const MatchCounts c = count_matches(pred, gold);
    CHECK(c.span == 1);
    CHECK(c.nuclearity == 1);
    CHECK(c.relation == 0);
    CHECK(c.predicted == 2);
    CHECK(c.gold == 2);
    const Scores s = score({pred}, {gold});
    CHECK(s.span == 50.0);
    CHECK(s.nuclearity == 50.0);
    CHECK(s.relation == 0.0);
  }
}

TEST_CASE("constituents include the root") {
  const auto c = constituents(testing::consumer_spending_tree());
  REQUIRE(c.size() == 2);
  CHECK(std::find(c.begin(), c.end(), Constituent{Span{0, 3}, Nuclearity::NS, Relation::Attribution}) != c.end());
  CHECK(std::find(c.begin(), c.end(), Constituent{Span{0, 2}, Nuclearity::NN, Relation::Comparison}) != c.end());
  testing::Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const int n = testing::uniform_int(rng, 1, 30);
    CHECK(constituents(testing::random_tree(rng, n)).size() == static_cast<std::size_t>(n - 1));
  }
}

TEST_CASE("micro averaging and reordering") {
  testing::Rng rng(4);
  std::vector<RstTree> gold, pred;
  for (int i = 0; i < 10; ++i) {
    gold.push_back(testing::random_tree(rng, testing::uniform_int(rng, 2, 25)));
    pred.push_back(testing::perturb(rng, gold.back()));
  }
  const Scores s = score(pred, gold);
  const Scores r = reference_score(pred, gold);
  CHECK(s.span == doctest::Approx(r.span).epsilon(1e-12));
  CHECK(s.relation == doctest::Approx(r.relation).epsilon(1e-12));
  std::reverse(gold.begin(), gold.end());
  std::reverse(pred.begin(), pred.end());
  const Scores back = score(pred, gold);
  CHECK(back.span == s.span);
  CHECK(back.nuclearity == s.nuclearity);
  CHECK(back.relation == s.relation);
}

TEST_CASE("score errors") {
  const RstTree t3 = testing::consumer_spending_tree();
  CHECK_THROWS_AS(score({t3}, {right_branching(4, Label{Nuclearity::NN, Relation::Joint})}), DataError);
  CHECK_THROWS_AS(score({t3, t3}, {t3}), DataError);
}

TEST_CASE("MFS baseline") {
  const Label elab{Nuclearity::NS, Relation::Elaboration};
  const Document doc = testing::consumer_spending_document();
  CHECK(to_bracketed(mfs_baseline(doc, elab).root()) ==
        "(NS-Elaboration (EDU 1) (NS-Elaboration (EDU 2) (EDU 3)))");
  CHECK(right_branching(1, elab).root().is_leaf());
  testing::Rng rng(5);
  for (int n = 1; n < 30; ++n) {
    const RstTree t = right_branching(n, elab);
    CHECK(validate_tree(t.root(), n).empty());
    for (const auto* node : internal_nodes(t.root())) {
      CHECK(node->label() == elab);
      CHECK(node->left().is_leaf());
    }
  }
}

TEST_CASE("most frequent label") {
  CHECK(most_frequent_label({testing::consumer_spending_tree()}) == Label{Nuclearity::NN, Relation::Comparison});
  const Label elab{Nuclearity::NS, Relation::Elaboration};
  CHECK(most_frequent_label({right_branching(5, elab), right_branching(3, elab)}) == elab);
  CHECK(most_frequent_label({testing::consumer_spending_tree(), right_branching(3, elab)}) == elab);
  CHECK_THROWS_AS(most_frequent_label({}), DataError);
  CHECK_THROWS_AS(most_frequent_label({right_branching(1, elab)}), DataError);
}

TEST_CASE("corpus splits") {
  const Split nl = split_corpus(80, 1);
  CHECK(nl.test.size() == 38);
  CHECK(nl.dev.size() == 42);
  CHECK(nl.train.empty());

  const Split big = split_corpus(174, 1);
  CHECK(big.test.size() == 38);
  CHECK(big.dev.size() == 25);
  CHECK(big.train.size() == 111);
  std::vector<std::size_t> all;
  for (const auto* part : {&big.train, &big.dev, &big.test}) all.insert(all.end(), part->begin(), part->end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i] == i);

  const Split again = split_corpus(174, 1);
  CHECK(again.train == big.train);
  CHECK(again.dev == big.dev);
  CHECK(again.test == big.test);
  CHECK(split_corpus(174, 2).test != big.test);

  CHECK_THROWS_AS(split_corpus(38, 1), DataError);
  CHECK(split_corpus(39, 1).dev.size() == 1);

  std::vector<std::string> ids;
  for (int i = 0; i < 150; ++i) ids.push_back("d" + std::to_string(i));
  std::vector<std::string> official;
  for (int i = 0; i < 38; ++i) official.push_back("d" + std::to_string(i * 3));
  const Split fixed = split_corpus(ids, 1, official);
  CHECK(fixed.test.size() == 38);
  for (std::size_t k = 0; k < 38; ++k) CHECK(ids[fixed.test[k]] == official[k]);
  // 112 left: taking 25 for dev would leave fewer than 100 to train on.
  CHECK(fixed.dev.size() == 112);
  CHECK(fixed.train.empty());
  ids.resize(0);
  for (int i = 0; i < 200; ++i) ids.push_back("d" + std::to_string(i));
  const Split larger = split_corpus(ids, 1, official);
  CHECK(larger.dev.size() == 25);
  CHECK(larger.train.size() == 137);
  CHECK_THROWS_AS(split_corpus(ids, 1, {"missing"}), DataError);
}

TEST_CASE("score formats") {
  const Scores s{85.0, 72.3, 60.1};
  CHECK(format_scores(s) == "span=85.00 nuc=72.30 rel=60.10");
  const std::string table = format_score_table({{"Mono", s}, {"MFS", Scores{58.2, 33.4, 22.1}}});
  for (const char* part : {"Span", "Nuc", "Rel", "Mono", "MFS", "85.00", "22.10"})
    CHECK(table.find(part) != std::string::npos);
}
