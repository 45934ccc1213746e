#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "checks.hpp"
#include "rst/error.hpp"
#include "rst/model/model.hpp"
#include "rst/text.hpp"

using namespace rst;
using testing::Fixture;
using testing::make_fixture;

namespace {

Dimensions tiny_dims() {
  Dimensions d;
  d.width = {6, 4, 3, 2, 2, 5};
  d.hidden1 = 10;
  d.hidden2 = 9;
  return d;
}

double max_abs_diff(const Parameters& a, const Parameters& b) {
  double m = 0.0;
  for (int i = 0; i < Parameters::kBlockCount; ++i)
    m = std::max(m, (a.block(i) - b.block(i)).cwiseAbs().maxCoeff());
  return m;
}

}  // namespace

TEST_CASE("vocabulary") {
  Vocabulary v;
  CHECK(v.size() == 2);
  CHECK(v.id("anything") == Vocabulary::kUnkId);
  const int id = v.add("cat");
  CHECK(id == 2);
  CHECK(v.add("cat") == 2);
  CHECK(v.id("cat") == 2);
  CHECK(v.find("dog") == std::nullopt);
}

TEST_CASE("dimensions") {
  const Dimensions d;
  CHECK(d.input_width() == 7 * (7 * 50 + 4 * 16 + 6 + 4 + 7 * 2) + 2 * 50);
  CHECK(d.input_width() == 3166);
}

TEST_CASE("forward") {
  Fixture f = make_fixture(1, 4, 3, 8, tiny_dims(), 0.3);
  const Example& ex = f.examples.front();

  SUBCASE("distribution") {
    for (const auto& e : f.examples) {
      const Eigen::VectorXd p = f.model.probabilities(e.x);
      CHECK(std::abs(p.sum() - 1.0) < 1e-9);
      CHECK(p.minCoeff() >= 0.0);
      CHECK((f.model.log_probabilities(e.x).array().exp() - p.array()).abs().maxCoeff() < 1e-12);
    }
  }
  SUBCASE("zero weights give a uniform distribution") {
    Model m = f.model;
    for (int b = 0; b < Parameters::kBlockCount; ++b) m.params().block(b).setZero();
    const Eigen::VectorXd p = m.probabilities(ex.x);
    const double u = 1.0 / static_cast<double>(m.actions().size());
    CHECK((p.array() - u).abs().maxCoeff() < 1e-15);
    CHECK(loss(m, {ex}) == doctest::Approx(std::log(static_cast<double>(m.actions().size()))));
  }
  SUBCASE("NONE rows do not matter") {
    Model m = f.model;
    bool has_none = false;
    for (int id : ex.x) has_none |= id == Vocabulary::kNoneId;
    REQUIRE(has_none);
    const Eigen::VectorXd before = m.probabilities(ex.x);
    for (auto& e : m.params().embedding) e.row(Vocabulary::kNoneId).setConstant(3.0);
    CHECK((m.probabilities(ex.x) - before).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("probability one on gold gives zero loss") {
    Model m = f.model;
    m.params().bo.setConstant(-1e3);
    m.params().bo(ex.gold) = 1e3;
    CHECK(loss(m, {ex}) < 1e-12);
  }
  SUBCASE("matches the reference implementation") {
    CHECK(std::abs(testing::naive_loss(f.model, f.examples).loss - loss(f.model, f.examples)) < 1e-12);
  }
  SUBCASE("unknown symbols map to UNK") {
    SymbolSequence seq;
    seq.fill("never-seen-before");
    const InputIds ids = f.model.encode(seq);
    for (int id : ids) CHECK(id == Vocabulary::kUnkId);
    seq.fill(std::string(kNone));
    for (int id : f.model.encode(seq)) CHECK(id == Vocabulary::kNoneId);
  }
}

TEST_CASE("gradient matches central differences") {
  const testing::GradientCheck g = testing::gradient_check(17);
  CHECK(g.naive_vs_model_loss < 1e-12);
  for (int b = 0; b < Parameters::kBlockCount; ++b) {
    CAPTURE(Parameters::block_name(b));
    CHECK(g.coordinates[b] > 0);
    CHECK(g.relative_error[b] < 1e-4);
  }
}

TEST_CASE("learning rate schedule") {
  CHECK(learning_rate(0.02, 0.0, 1000000) == 0.02);
  CHECK(learning_rate(0.02, 1e-5, 100000) == doctest::Approx(0.01).epsilon(1e-15));
  CHECK(learning_rate(0.03, 1e-7, 0) == 0.03);
}

TEST_CASE("train") {
  Fixture f = make_fixture(2, 4, 3, 7, tiny_dims(), 0.2);

  SUBCASE("zero learning rate leaves parameters unchanged") {
    TrainOptions opt;
    opt.learning_rate = 0.0;
    opt.epochs = 1;
    const Model out = train(f.model, f.examples, opt);
    CHECK(max_abs_diff(out.params(), f.model.params()) == 0.0);
  }
  SUBCASE("averaged parameters are the mean of the snapshots") {
    TrainOptions opt;
    opt.learning_rate = 0.05;
    opt.decay = 1e-2;
    opt.epochs = 1;
    opt.seed = 99;
    const Model averaged = train(f.model, f.examples, opt);

    std::vector<std::size_t> order(f.examples.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    seeded_shuffle(order, 99);
    Model w = f.model;
    Parameters sum = Parameters::zeros_like(w.params());
    long t = 0;
    for (std::size_t idx : order) {
      const Parameters g = gradient(w, {f.examples[idx]});
      const double eta = 0.05 / (1.0 + 1e-2 * static_cast<double>(t++));
      for (int b = 0; b < Parameters::kBlockCount; ++b) {
        w.params().block(b) -= eta * g.block(b);
        sum.block(b) += w.params().block(b);
      }
    }
    for (int b = 0; b < Parameters::kBlockCount; ++b) sum.block(b) /= static_cast<double>(t);
    CHECK(max_abs_diff(averaged.params(), sum) < 1e-12);
  }
  SUBCASE("deterministic") {
    TrainOptions opt;
    opt.epochs = 3;
    opt.seed = 5;
    CHECK(model_checksum(train(f.model, f.examples, opt)) == model_checksum(train(f.model, f.examples, opt)));
    const auto first = model_checksum(train(f.model, f.examples, opt));
    opt.seed = 6;
    CHECK(model_checksum(train(f.model, f.examples, opt)) != first);
  }
  SUBCASE("frozen words are not updated") {
    Model m = f.model;
    m.set_frozen_words(true);
    TrainOptions opt;
    opt.learning_rate = 0.1;
    opt.epochs = 2;
    const Model out = train(m, f.examples, opt);
    const int word = static_cast<int>(SymbolType::Word);
    CHECK((out.params().embedding[word] - m.params().embedding[word]).cwiseAbs().maxCoeff() == 0.0);
    const int pos = static_cast<int>(SymbolType::Pos);
    CHECK((out.params().embedding[pos] - m.params().embedding[pos]).cwiseAbs().maxCoeff() > 0.0);
  }
  SUBCASE("empty corpus") {
    CHECK_THROWS_AS(train(f.model, {}, TrainOptions{}), DataError);
  }
}

TEST_CASE("overfits a toy corpus") {
  const testing::OverfitCheck o = testing::overfit_check(3);
  CHECK(o.accuracy >= 0.99);
  CHECK(o.first_epoch_at_99 >= 1);
  CHECK(o.first_epoch_at_99 <= 20);
  CHECK(o.parsed_exactly == o.documents);
  CHECK(o.seconds < 30.0);
}

TEST_CASE("seeded shuffle") {
  std::vector<std::size_t> a(50), b(50);
  for (std::size_t i = 0; i < 50; ++i) a[i] = b[i] = i;
  seeded_shuffle(a, 10);
  seeded_shuffle(b, 10);
  CHECK(a == b);
  std::vector<std::size_t> sorted = a;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < 50; ++i) CHECK(sorted[i] == i);
}

TEST_CASE("model files") {
  Fixture f = make_fixture(4, 3, 3, 6, tiny_dims(), 0.2);
  f.model.set_hyperparams(Hyperparams{0.02, 1e-6, 7, 4, 11});
  const std::string dir = testing::temp_dir("model");
  const std::string path = dir + "/m.bin";

  SUBCASE("round trip") {
    save_model(f.model, path);
    const Model back = load_model(path);
    CHECK(back.hyperparams() == f.model.hyperparams());
    CHECK(back.dims() == f.model.dims());
    CHECK(back.actions().actions() == f.model.actions().actions());
    CHECK(back.vocab()[0].items() == f.model.vocab()[0].items());
    CHECK(max_abs_diff(back.params(), f.model.params()) == 0.0);
    for (const auto& e : f.examples) CHECK(back.probabilities(e.x) == f.model.probabilities(e.x));
    CHECK(serialize(back) == serialize(f.model));
    CHECK(model_checksum(back) == model_checksum(f.model));
  }
  SUBCASE("truncated file") {
    const std::string bytes = serialize(f.model);
    try {
      deserialize(std::string_view(bytes).substr(0, bytes.size() - 9));
      FAIL("no error");
    } catch (const DataError& e) {
      CHECK(std::string(e.what()).find("checksum") != std::string::npos);
    }
    std::string flipped = bytes;
    flipped[bytes.size() / 2] ^= 0x20;
    CHECK_THROWS_AS(deserialize(flipped), DataError);
  }
  SUBCASE("template mismatch") {
    Model m = f.model;
    m.set_template_version("edu5x10/v0");
    try {
      deserialize(serialize(m));
      FAIL("no error");
    } catch (const DataError& e) {
      const std::string what = e.what();
      CHECK(what.find("edu5x10/v0") != std::string::npos);
      CHECK(what.find(std::string(template_version())) != std::string::npos);
    }
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(load_model(dir + "/nope.bin"), DataError);
  }
}

TEST_CASE("grid search") {
  Fixture f = make_fixture(6, 6, 3, 6, tiny_dims(), 0.2);
  FeatureExtractor extract;
  std::vector<EncodedDocument> dev;
  std::vector<RstTree> gold;
  for (int i = 0; i < 2; ++i) {
    dev.push_back(f.model.encode(extract(f.docs[i])));
    gold.push_back(*f.docs[i].gold);
  }

  SUBCASE("full grid size") { CHECK(GridSpec{}.size() == 1440); }
  SUBCASE("one point") {
    GridSpec g;
    g.learning_rates = {0.02};
    g.decays = {0.0};
    g.epochs = {3};
    g.beams = {2};
    const GridResult r = grid_search(f.model, f.examples, dev, gold, g);
    CHECK(r.points.size() == 1);
    CHECK(r.best.hp.learning_rate == 0.02);
    CHECK(r.best.hp.epochs == 3);
    CHECK(r.best.hp.beam == 2);
    CHECK(r.model.hyperparams() == r.best.hp);

    TrainOptions opt;
    opt.learning_rate = 0.02;
    opt.epochs = 3;
    opt.seed = g.seed;
    const Model direct = train(f.model, f.examples, opt);
    CHECK(max_abs_diff(direct.params(), r.model.params()) == 0.0);
  }
  SUBCASE("epochs are checkpoints of one run") {
    GridSpec g;
    g.learning_rates = {0.02};
    g.decays = {0.0};
    g.epochs = {1, 2, 3};
    g.beams = {1, 4};
    std::vector<std::string> lines;
    const GridResult r = grid_search(f.model, f.examples, dev, gold, g, [&](const std::string& l) { lines.push_back(l); });
    CHECK(r.points.size() == 6);
    CHECK(lines.size() == 3);
    for (const auto& p : r.points) CHECK_FALSE(better(p, r.best));
  }
  SUBCASE("ties go to the smaller beam") {
    GridPoint a{Hyperparams{0.01, 0, 1, 4, 1}, Scores{80, 60, 40}};
    GridPoint b{Hyperparams{0.01, 0, 1, 2, 1}, Scores{80, 60, 40}};
    CHECK(better(b, a));
    CHECK_FALSE(better(a, b));
    GridPoint c{Hyperparams{0.01, 0, 1, 32, 1}, Scores{70, 50, 41}};
    CHECK(better(c, b));
    GridPoint d{Hyperparams{0.01, 0, 1, 32, 1}, Scores{70, 61, 40}};
    CHECK(better(d, b));
  }
}
