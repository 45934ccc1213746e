#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "generators.hpp"
#include "rst/cli/commands.hpp"
#include "rst/error.hpp"
#include "rst/text.hpp"

using namespace rst;
using namespace rst::cli;
namespace fs = std::filesystem;

namespace {

int run_args(std::vector<std::string> args, std::string* out_text = nullptr, std::string* err_text = nullptr) {
  args.insert(args.begin(), "rstparse");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

std::string corpus(const std::string& name, int docs, std::uint64_t seed, const std::string& lang = "en") {
  testing::Rng rng(seed);
  const std::string dir = testing::temp_dir(name);
  write_corpus(dir, testing::synthetic_corpus(rng, lang, docs, 2, 4, lang));
  return dir;
}

// Small grid over a 170-document corpus: 107 train, 25 dev, 38 test.
TrainConfig small_train(const std::string& dir) {
  TrainConfig c;
  c.corpora = {{"en", dir}};
  c.target = "en";
  c.grid.learning_rates = {0.02};
  c.grid.decays = {0.0, 1e-5};
  c.grid.epochs = {1, 2};
  c.grid.beams = {1, 2};
  c.seed = 3;
  return c;
}

}  // namespace

TEST_CASE("argument parsers") {
  const LangPaths p = parse_lang_paths({"en=/a", "de=/b", "en=/c"});
  CHECK(p.at("en") == "/c");
  CHECK(p.at("de") == "/b");
  CHECK_THROWS_AS(parse_lang_paths({"en"}), UsageError);
  CHECK_THROWS_AS(parse_lang_paths({"=x"}), UsageError);

  CHECK(parse_double_list("0.01,0.02, 0.03") == std::vector<double>{0.01, 0.02, 0.03});
  CHECK(parse_double_list("1e-5,0") == std::vector<double>{1e-5, 0.0});
  CHECK_THROWS_AS(parse_double_list("0.1x"), UsageError);
  CHECK(parse_int_list("1-4") == std::vector<int>{1, 2, 3, 4});
  CHECK(parse_int_list("1,2,4,8") == std::vector<int>{1, 2, 4, 8});
  CHECK(parse_int_list("3-3,7") == std::vector<int>{3, 7});
  CHECK_THROWS_AS(parse_int_list("5-2"), UsageError);
  CHECK_THROWS_AS(parse_int_list("a"), UsageError);

  CHECK(parse_mode("cross-plus-dev") == Mode::CrossPlusDev);
  CHECK(parse_mode("cross-source-only") == Mode::CrossSourceOnly);
  CHECK_THROWS_AS(parse_mode("both"), UsageError);

  CHECK(config_arguments("# c\nlr = 0.02\n\nfixed = true\ncorpus = en=/x\n") ==
        std::vector<std::string>{"--lr", "0.02", "--fixed", "--corpus", "en=/x"});
  CHECK_THROWS_AS(config_arguments("novalue\n"), UsageError);
}

TEST_CASE("exit codes") {
  std::string out, err;
  CHECK(run_args({}, &out, &err) == kUsage);
  CHECK(run_args({"train"}, &out, &err) == kUsage);
  CHECK(run_args({"train", "--corpus", "en", "--target", "en"}, &out, &err) == kUsage);
  CHECK(err.find("lang=path") != std::string::npos);
  CHECK(run_args({"--help"}, &out, &err) == kOk);
  CHECK(out.find("harmonize") != std::string::npos);
  CHECK(run_args({"oracle-check", "--corpus", "/nonexistent/rst"}, &out, &err) == kDataError);
  CHECK(run_args({"eval", "--pred", "/nonexistent/a", "--gold", "/nonexistent/b"}, &out, &err) == kDataError);

  const std::string dir = testing::temp_dir("cli_empty_manifest");
  text::write_file(dir + "/manifest.tsv", "# nothing\n");
  CHECK(run_args({"harmonize", "--manifest", dir + "/manifest.tsv", "--out", dir + "/out"}, &out, &err) ==
        kDataError);
  CHECK(err.find("no documents") != std::string::npos);
}

TEST_CASE("oracle check and gold scoring") {
  const std::string dir = corpus("cli_gold", 12, 1);
  std::string out;
  CHECK(run_args({"oracle-check", "--corpus", dir}, &out) == kOk);
  CHECK(out.find("12/12 round-trips pass") != std::string::npos);

  const std::vector<Document> docs = read_corpus(dir);
  std::vector<std::string> ids;
  std::vector<RstTree> trees;
  for (const auto& d : docs) {
    ids.push_back(d.id);
    trees.push_back(*d.gold);
  }
  const std::string pred = testing::temp_dir("cli_gold_pred");
  write_trees(pred, ids, trees);
  CHECK(run_args({"eval", "--pred", pred, "--gold", dir}, &out) == kOk);
  CHECK(out.find("span=100.00 nuc=100.00 rel=100.00") != std::string::npos);

  text::write_file(dir + "/" + file_stem(ids[0]) + ".tree", "(NN-Joint (EDU 1) (EDU 3))");
  CHECK(run_args({"oracle-check", "--corpus", dir}, &out) != kOk);
}

TEST_CASE("baseline on right-branching gold scores 100") {
  testing::Rng rng(2);
  std::vector<Document> docs = testing::synthetic_corpus(rng, "mfs", 45, 1, 6);
  const Label elab{Nuclearity::NS, Relation::Elaboration};
  for (auto& d : docs) d.gold = mfs_baseline(d, elab);
  const std::string dir = testing::temp_dir("cli_mfs");
  write_corpus(dir, docs);
  std::ostringstream out;
  BaselineConfig c;
  c.corpus_dir = dir;
  c.out_dir = testing::temp_dir("cli_mfs_out");
  const Scores s = cmd_baseline(c, out);
  CHECK(s.span == 100.0);
  CHECK(s.relation == 100.0);
  CHECK(out.str().find("label=NS-Elaboration (from dev)") != std::string::npos);
  std::string text;
  CHECK(run_args({"eval", "--pred", c.out_dir, "--gold", dir}, &text) == kDataError);  // only test documents
}

TEST_CASE("train, parse and evaluate end to end") {
  const std::string dir = corpus("cli_e2e", 170, 4);
  const std::string work = testing::temp_dir("cli_e2e_work");
  std::string out, err;
  const int code = run_args({"train", "--corpus", "en=" + dir, "--target", "en", "--lr", "0.02", "--decay", "0",
                             "--epochs", "2", "--beam", "2", "--fixed", "--seed", "5", "--model",
                             work + "/m.bin", "--report", work + "/dev.txt"},
                            &out, &err);
  INFO(err);
  REQUIRE(code == kOk);
  CHECK(out.find("training documents: 107, development documents: 25") != std::string::npos);
  CHECK(out.find("epoch=1 loss=") != std::string::npos);
  CHECK(out.find("epoch=2 loss=") != std::string::npos);
  CHECK(fs::exists(work + "/m.bin"));
  CHECK(text::read_file(work + "/dev.txt").find("lr=0.02 decay=0 epochs=2 beam=2") != std::string::npos);

  const Model m = load_model(work + "/m.bin");
  CHECK(m.hyperparams() == Hyperparams{0.02, 0.0, 2, 2, 5});

  REQUIRE(run_args({"parse", "--model", work + "/m.bin", "--corpus", dir, "--out", work + "/pred"}, &out) == kOk);
  CHECK(out.find("parsed 170 document(s) with beam 2") != std::string::npos);
  REQUIRE(run_args({"eval", "--pred", work + "/pred", "--gold", dir}, &out) == kOk);
  CHECK(out.find("span=") != std::string::npos);

  CHECK(run_args({"parse", "--model", work + "/m.bin", "--corpus", dir, "--out", work + "/pred1", "--beam", "1",
                  "--trace"},
                 &out) == kOk);
  CHECK(out.find("document ") != std::string::npos);
}

TEST_CASE("config file with command-line override") {
  const std::string dir = corpus("cli_config", 170, 6);
  const std::string work = testing::temp_dir("cli_config_work");
  text::write_file(work + "/train.cfg", "# toy\ncorpus = en=" + dir +
                                            "\ntarget = en\nlr = 0.02\ndecay = 0\nepochs = 3\nbeam = 1\n"
                                            "fixed = true\nseed = 9\n");
  std::string out, err;
  const int code = run_args({"train", "--config", work + "/train.cfg", "--epochs", "1", "--model", work + "/m.bin"},
                            &out, &err);
  INFO(err);
  REQUIRE(code == kOk);
  CHECK(load_model(work + "/m.bin").hyperparams() == Hyperparams{0.02, 0.0, 1, 1, 9});
  CHECK(run_args({"train", "--config", work + "/missing.cfg"}, &out, &err) == kUsage);
}

TEST_CASE("training is deterministic") {
  const std::string dir = corpus("cli_determinism", 170, 7);
  std::ostringstream log1, log2;
  const TrainResult a = cmd_train(small_train(dir), log1);
  const TrainResult b = cmd_train(small_train(dir), log2);
  CHECK(a.checksum == b.checksum);
  CHECK(a.dev_table == b.dev_table);
  CHECK(log1.str() == log2.str());
  // 2 (lr, decay) runs x 2 epochs x 2 beams, plus the best row.
  int rows = 0;
  for (const auto& line : text::split(a.dev_table, '\n')) rows += line.find("lr=") != std::string::npos;
  CHECK(rows == 9);
}

TEST_CASE("cross-lingual modes") {
  const std::string target = corpus("cli_target", 45, 8, "de");
  const std::string source = corpus("cli_source", 170, 9, "en");
  TrainConfig c;
  c.corpora = {{"de", target}, {"en", source}};
  c.target = "de";
  c.fixed = Hyperparams{0.02, 0.0, 1, 1, 1};

  SUBCASE("source only never reads the target") {
    c.mode = Mode::CrossSourceOnly;
    const std::string dict = testing::temp_dir("cli_dict") + "/de-en.tsv";
    text::write_file(dict, "w1\tdog\n");
    c.dictionaries = {{"de", dict}};
    AccessLog access;
    std::ostringstream log;
    const TrainResult r = cmd_train(c, log, &access);
    CHECK(log.str().find("training documents: 107, development documents: 25") != std::string::npos);
    CHECK_FALSE(access.paths.empty());
    for (const auto& p : access.paths) {
      CAPTURE(p);
      CHECK(p.rfind(target, 0) != 0);
      CHECK(p != dict);
    }
    CHECK(r.dev.has_value());
  }
  SUBCASE("plus dev adds the source dev split and the target") {
    c.mode = Mode::CrossPlusDev;
    AccessLog access;
    std::ostringstream log;
    cmd_train(c, log, &access);
    // Source 107 + 25, target train empty (45 documents): 7 target dev.
    CHECK(log.str().find("training documents: 132, development documents: 7") != std::string::npos);
    bool read_target = false;
    for (const auto& p : access.paths) read_target |= p.rfind(target, 0) == 0;
    CHECK(read_target);
  }
  SUBCASE("no sources") {
    c.corpora = {{"de", target}};
    c.mode = Mode::CrossSourceOnly;
    std::ostringstream log;
    CHECK_THROWS_AS(cmd_train(c, log), DataError);
  }
  SUBCASE("mono on a small corpus has no training split") {
    std::ostringstream log;
    CHECK_THROWS_AS(cmd_train(c, log), DataError);
  }
}

TEST_CASE("harmonize and coverage commands") {
  const std::string dir = testing::temp_dir("cli_harmonize");
  const Document fig = testing::consumer_spending_document();
  text::write_file(dir + "/a.dis", "( Root (span 1 2) ( Nucleus (leaf 1) (rel2par span) (text _!Consumer spending_!) )"
                                   " ( Satellite (leaf 2) (rel2par elaboration) (text _!rose._!) ) )");
  text::write_file(dir + "/b.dis", "( Root (span 1 2) ( Nucleus (leaf 1) (rel2par span) (text _!x_!) )"
                                   " ( Satellite (leaf 2) (rel2par nonsense) (text _!y_!) ) )");
  text::write_file(dir + "/manifest.tsv", "a\ta.dis\t-\ten\nb\tb.dis\t-\ten\n");
  std::string out, err;
  const int code = run_args({"harmonize", "--manifest", dir + "/manifest.tsv", "--out", dir + "/out", "--name", "toy"},
                            &out, &err);
  INFO(err);
  REQUIRE(code == kOk);
  CHECK(out.find("1 document(s) skipped") != std::string::npos);
  CHECK(text::read_file(dir + "/out/skipped.txt").rfind("b\t", 0) == 0);
  CHECK(text::read_file(dir + "/out/stats.txt").find("toy") != std::string::npos);

  text::write_file(dir + "/en-xx.tsv", "consumer\tconsommateur\n");
  CHECK(run_args({"coverage", "--corpus", "en=" + dir + "/out", "--dict", "en=" + dir + "/en-xx.tsv"}, &out) == kOk);
  CHECK(out.find("Size dict.") != std::string::npos);
  CHECK(out.find("# unk. words") != std::string::npos);
}
