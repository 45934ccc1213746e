#include "rst/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <list>
#include <sstream>

#include "rst/decode/beam.hpp"
#include "rst/error.hpp"
#include "rst/harmonize/label_mapping.hpp"
#include "rst/text.hpp"

namespace fs = std::filesystem;

namespace rst::cli {
namespace {

std::string read_logged(const std::string& path, AccessLog* log) {
  if (log) log->paths.push_back(path);
  return text::read_file(path);
}

std::vector<std::string> read_id_list(const std::string& path, AccessLog* log) {
  std::vector<std::string> ids;
  for (const auto& line : text::split(read_logged(path, log), '\n')) {
    std::string_view l = text::trim(line);
    if (!l.empty() && l.front() != '#') ids.emplace_back(l);
  }
  return ids;
}

template <typename T>
std::vector<T> pick(const std::vector<T>& items, const std::vector<std::size_t>& idx) {
  std::vector<T> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(items[i]);
  return out;
}

struct LanguageData {
  std::vector<Document> docs;
  Split split;
};

LanguageData load_language(const TrainConfig& c, const std::string& lang, AccessLog* access) {
  auto it = c.corpora.find(lang);
  if (it == c.corpora.end()) throw DataError("no corpus given for language '" + lang + "'");
  LanguageData data;
  data.docs = read_corpus(it->second, access);
  for (const auto& d : data.docs)
    if (!d.gold) throw DataError("document '" + d.id + "' in " + it->second + " has no tree");
  if (auto t = c.test_ids.find(lang); t != c.test_ids.end()) {
    std::vector<std::string> ids;
    for (const auto& d : data.docs) ids.push_back(d.id);
    data.split = split_corpus(ids, c.seed, read_id_list(t->second, access));
  } else {
    data.split = split_corpus(data.docs.size(), c.seed);
  }
  return data;
}

void append(std::vector<Document>& to, const std::vector<Document>& docs, const std::vector<std::size_t>& idx) {
  for (std::size_t i : idx) to.push_back(docs[i]);
}

std::vector<RstTree> gold_trees(const std::vector<Document>& docs) {
  std::vector<RstTree> out;
  for (const auto& d : docs) {
    if (!d.gold) throw DataError("document '" + d.id + "' has no gold tree");
    out.push_back(*d.gold);
  }
  return out;
}

// Keeps dictionaries alive for the word functions that reference them.
struct Dictionaries {
  std::list<BilingualDictionary> store;

  void install(FeatureExtractor& extract, const LangPaths& paths, const std::set<std::string>& languages,
               AccessLog* access) {
    for (const auto& [lang, path] : paths) {
      if (!languages.count(lang)) continue;
      store.push_back(BilingualDictionary::from_text(read_logged(path, access)));
      extract.set_word(lang, translating_word(store.back()));
    }
  }
};

std::string point_name(const Hyperparams& hp) {
  std::ostringstream os;
  os << "lr=" << hp.learning_rate << " decay=" << hp.decay << " epochs=" << hp.epochs << " beam=" << hp.beam;
  return os.str();
}

}  // namespace

LangPaths parse_lang_paths(const std::vector<std::string>& items) {
  LangPaths out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw UsageError("expected lang=path, got '" + item + "'");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> out;
  for (const auto& item : text::split(csv, ',')) {
    const std::string s(text::trim(item));
    try {
      std::size_t used = 0;
      out.push_back(std::stod(s, &used));
      if (used != s.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw UsageError("expected a number, got '" + s + "'");
    }
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  auto to_int = [](const std::string& s) {
    try {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw UsageError("expected an integer, got '" + s + "'");
    }
  };
  for (const auto& item : text::split(csv, ',')) {
    const std::string s(text::trim(item));
    const auto dash = s.find('-', 1);
    if (dash != std::string::npos) {
      const int lo = to_int(s.substr(0, dash));
      const int hi = to_int(s.substr(dash + 1));
      if (hi < lo) throw UsageError("empty range '" + s + "'");
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(to_int(s));
    }
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

std::vector<std::string> config_arguments(std::string_view content) {
  std::vector<std::string> args;
  std::size_t line_no = 0;
  for (const auto& line : text::split(content, '\n')) {
    ++line_no;
    std::string_view l = text::trim(line);
    if (l.empty() || l.front() == '#') continue;
    const auto eq = l.find('=');
    if (eq == std::string_view::npos)
      throw UsageError("config line " + std::to_string(line_no) + ": expected key = value");
    const std::string key(text::trim(l.substr(0, eq)));
    const std::string value(text::trim(l.substr(eq + 1)));
    if (key.empty()) throw UsageError("config line " + std::to_string(line_no) + ": empty key");
    args.push_back("--" + key);
    if (value != "true") args.push_back(value);
  }
  return args;
}

Mode parse_mode(std::string_view text) {
  if (text == "mono") return Mode::Mono;
  if (text == "cross-source-only") return Mode::CrossSourceOnly;
  if (text == "cross-plus-dev") return Mode::CrossPlusDev;
  throw UsageError("unknown mode '" + std::string(text) + "'");
}

// ---- harmonize ----

HarmonizeSummary cmd_harmonize(const HarmonizeConfig& config, std::ostream& out) {
  const auto entries = read_manifest(config.manifest);
  if (entries.empty()) throw DataError("manifest " + config.manifest + " lists no documents");
  const LabelMapping mapping =
      config.mapping.empty() ? LabelMapping::builtin() : LabelMapping::from_file(config.mapping);
  HarmonizeOptions options;
  options.drop_title = config.drop_title;

  HarmonizeSummary summary;
  std::vector<HarmonizedDocument> done;
  for (const auto& entry : entries) {
    try {
      done.push_back(harmonize_document(entry, mapping, options));
      for (const auto& w : done.back().warnings) out << entry.id << ": " << w << '\n';
    } catch (const DataError& e) {
      summary.skipped.emplace_back(entry.id, e.what());
      out << entry.id << ": skipped: " << e.what() << '\n';
    }
  }
  if (done.empty()) throw DataError("no document of " + config.manifest + " could be harmonized");

  std::vector<Document> docs;
  for (auto& h : done) docs.push_back(h.doc);
  write_corpus(config.out_dir, docs);
  summary.stats = compute_stats(static_cast<int>(entries.size()), done);
  const std::string name = config.name.empty() ? fs::path(config.manifest).stem().string() : config.name;
  const std::string table = format_stats({{name, summary.stats}});
  text::write_file((fs::path(config.out_dir) / "stats.txt").string(), table);
  std::string skipped;
  for (const auto& [id, reason] : summary.skipped) skipped += id + '\t' + reason + '\n';
  text::write_file((fs::path(config.out_dir) / "skipped.txt").string(), skipped);
  out << table << summary.skipped.size() << " document(s) skipped\n";
  return summary;
}

// ---- train ----

TrainResult cmd_train(const TrainConfig& c, std::ostream& log, AccessLog* access) {
  if (c.target.empty()) throw UsageError("train needs a target language");
  std::vector<std::string> sources = c.sources;
  if (sources.empty() && c.mode != Mode::Mono)
    for (const auto& [lang, path] : c.corpora)
      if (lang != c.target) sources.push_back(lang);
  sources.erase(std::remove(sources.begin(), sources.end(), c.target), sources.end());
  if (c.mode != Mode::Mono && sources.empty()) throw DataError("cross-lingual training needs source corpora");

  std::vector<Document> train_docs;
  std::vector<Document> dev_docs;
  std::set<std::string> languages;
  if (c.mode == Mode::Mono || c.mode == Mode::CrossPlusDev) {
    LanguageData target = load_language(c, c.target, access);
    append(train_docs, target.docs, target.split.train);
    append(dev_docs, target.docs, target.split.dev);
    for (const auto& d : target.docs) languages.insert(d.language);
  }
  if (c.mode != Mode::Mono) {
    for (const auto& lang : sources) {
      LanguageData src = load_language(c, lang, access);
      append(train_docs, src.docs, src.split.train);
      if (c.mode == Mode::CrossPlusDev)
        append(train_docs, src.docs, src.split.dev);
      else
        append(dev_docs, src.docs, src.split.dev);
      for (const auto& d : src.docs) languages.insert(d.language);
    }
  }
  if (train_docs.empty()) throw DataError("empty training set");
  log << "training documents: " << train_docs.size() << ", development documents: " << dev_docs.size() << '\n';

  FeatureExtractor extract;
  Dictionaries dictionaries;
  dictionaries.install(extract, c.dictionaries, languages, access);
  std::optional<EmbeddingTable> embeddings;
  if (!c.embeddings.empty())
    embeddings = EmbeddingTable::from_text(read_logged(c.embeddings, access), c.embedding_dims);

  const Model initial =
      initial_model(train_docs, extract, Dimensions{}, c.seed, embeddings ? &*embeddings : nullptr, c.init_scale);
  std::vector<Example> examples;
  for (const auto& d : train_docs) {
    auto ex = oracle_examples(initial, d, extract(d));
    examples.insert(examples.end(), ex.begin(), ex.end());
  }
  std::vector<EncodedDocument> dev;
  for (const auto& d : dev_docs) dev.push_back(initial.encode(extract(d)));
  const std::vector<RstTree> dev_gold = gold_trees(dev_docs);
  log << "actions: " << initial.actions().size() << ", examples: " << examples.size() << '\n';

  TrainResult result;
  auto log_line = [&](const std::string& line) { log << line << '\n'; };
  if (c.fixed) {
    Hyperparams hp = *c.fixed;
    hp.seed = c.seed;
    TrainOptions opt;
    opt.learning_rate = hp.learning_rate;
    opt.decay = hp.decay;
    opt.epochs = hp.epochs;
    opt.seed = hp.seed;
    opt.on_epoch = [&](int epoch, const Model& averaged, double mean_loss) {
      std::ostringstream os;
      os << "epoch=" << epoch << " loss=" << mean_loss;
      if (!dev.empty()) os << " | beam=" << hp.beam << ' ' << format_scores(evaluate_model(averaged, dev, dev_gold, hp.beam));
      log_line(os.str());
    };
    result.model = train(initial, examples, opt);
    result.model.set_hyperparams(hp);
    result.best = hp;
    if (!dev.empty()) {
      result.dev = evaluate_model(result.model, dev, dev_gold, hp.beam);
      result.dev_table = format_score_table({{point_name(hp), *result.dev}});
    }
  } else {
    GridSpec grid = c.grid;
    grid.seed = c.seed;
    GridResult g = grid_search(initial, examples, dev, dev_gold, grid, log_line);
    std::vector<std::pair<std::string, Scores>> rows;
    for (const auto& p : g.points) rows.emplace_back(point_name(p.hp), p.dev);
    rows.emplace_back("best " + point_name(g.best.hp), g.best.dev);
    result.model = std::move(g.model);
    result.best = g.best.hp;
    result.dev = g.best.dev;
    result.dev_table = format_score_table(rows);
  }
  result.checksum = model_checksum(result.model);
  log << "selected " << point_name(result.best);
  if (result.dev) log << " dev " << format_scores(*result.dev);
  log << "\nmodel checksum " << std::hex << result.checksum << std::dec << '\n';
  if (!c.model_path.empty()) save_model(result.model, c.model_path);
  if (!c.report_path.empty()) text::write_file(c.report_path, result.dev_table);
  return result;
}

// ---- parse / eval / baseline / oracle-check / coverage ----

void cmd_parse(const ParseConfig& c, std::ostream& out) {
  const Model model = load_model(c.model_path);
  const std::vector<Document> docs = read_corpus(c.corpus_dir);
  FeatureExtractor extract;
  Dictionaries dictionaries;
  std::set<std::string> languages;
  for (const auto& d : docs) languages.insert(d.language);
  dictionaries.install(extract, c.dictionaries, languages, nullptr);
  const int beam = c.beam.value_or(std::max(1, model.hyperparams().beam));

  std::vector<std::string> ids;
  std::vector<RstTree> trees;
  for (const auto& d : docs) {
    if (c.trace) out << "document " << d.id << '\n';
    trees.push_back(parse(model.encode(extract(d)), model, beam, c.trace ? &out : nullptr).tree);
    ids.push_back(d.id);
  }
  write_trees(c.out_dir, ids, trees);
  out << "parsed " << docs.size() << " document(s) with beam " << beam << '\n';
}

Scores cmd_eval(const std::string& pred_dir, const std::string& gold_dir, std::ostream& out) {
  const std::vector<Document> gold_docs = read_corpus(gold_dir);
  std::vector<std::string> ids;
  for (const auto& d : gold_docs) ids.push_back(d.id);
  const Scores s = score(read_trees(pred_dir, ids), gold_trees(gold_docs));
  out << format_score_table({{fs::path(pred_dir).filename().string(), s}}) << format_scores(s) << '\n';
  return s;
}

Scores cmd_baseline(const BaselineConfig& c, std::ostream& out) {
  const std::vector<Document> docs = read_corpus(c.corpus_dir);
  Split split;
  if (!c.test_ids.empty()) {
    std::vector<std::string> ids;
    for (const auto& d : docs) ids.push_back(d.id);
    split = split_corpus(ids, c.seed, read_id_list(c.test_ids, nullptr));
  } else {
    split = split_corpus(docs.size(), c.seed);
  }
  const auto& label_source = split.train.empty() ? split.dev : split.train;
  const Label label = most_frequent_label(gold_trees(pick(docs, label_source)));

  const std::vector<Document> test = pick(docs, split.test);
  std::vector<RstTree> pred;
  std::vector<std::string> ids;
  for (const auto& d : test) {
    pred.push_back(mfs_baseline(d, label));
    ids.push_back(d.id);
  }
  if (!c.out_dir.empty()) write_trees(c.out_dir, ids, pred);
  const Scores s = score(pred, gold_trees(test));
  out << "label=" << to_string(label) << " (from " << (split.train.empty() ? "dev" : "train") << ")\n"
      << format_score_table({{"MFS", s}}) << format_scores(s) << '\n';
  return s;
}

int cmd_oracle_check(const std::string& corpus_dir, std::ostream& out) {
  const std::vector<Document> docs = read_corpus(corpus_dir);
  int failed = 0;
  for (const auto& d : docs) {
    std::string problem;
    try {
      if (!d.gold) throw DataError("no gold tree");
      const auto actions = oracle(*d.gold);
      if (static_cast<int>(actions.size()) != 2 * d.edu_count() - 1) problem = "wrong sequence length";
      else if (!(replay(actions, d.edu_count()) == *d.gold)) problem = "replay differs from the gold tree";
    } catch (const std::exception& e) {
      problem = e.what();
    }
    out << d.id << '\t' << (problem.empty() ? "PASS" : "FAIL " + problem) << '\n';
    if (!problem.empty()) ++failed;
  }
  out << docs.size() - failed << '/' << docs.size() << " round-trips pass\n";
  return failed;
}

void cmd_coverage(const LangPaths& corpora, const LangPaths& dictionaries, std::ostream& out) {
  std::vector<std::pair<std::string, CoverageReport>> rows;
  for (const auto& [lang, dir] : corpora) {
    auto d = dictionaries.find(lang);
    const BilingualDictionary dict =
        d == dictionaries.end() ? BilingualDictionary{} : BilingualDictionary::from_file(d->second);
    rows.emplace_back(lang, coverage_report(read_corpus(dir), dict));
  }
  out << format_coverage(rows);
}

// ---- entry point ----

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv, argv + argc);
  for (std::size_t i = 1; i < args.size(); ++i) {
    std::string path;
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + i, args.begin() + i + 2);
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + i);
    } else {
      continue;
    }
    try {
      auto extra = config_arguments(text::read_file(path));
      const std::size_t at = std::min<std::size_t>(2, args.size());
      args.insert(args.begin() + at, extra.begin(), extra.end());
    } catch (const std::exception& e) {
      err << "config: " << e.what() << '\n';
      return kUsage;
    }
    break;
  }

  CLI::App app{"Multilingual RST discourse parser"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Print help for every subcommand");
  app.add_option("--config", "Flat key=value file; command-line flags override it");

  HarmonizeConfig hc;
  std::vector<std::string> drop_title;
  auto* harmonize = app.add_subcommand("harmonize", "Harmonize a raw corpus listed in a manifest");
  harmonize->add_option("--manifest", hc.manifest, "Manifest: id, tree file, conllu file, language")->required();
  harmonize->add_option("--out", hc.out_dir, "Output directory")->required();
  harmonize->add_option("--name", hc.name, "Corpus name in the statistics table");
  harmonize->add_option("--drop-title", drop_title, "Languages whose first segment is a title")->delimiter(',');
  harmonize->add_option("--mapping", hc.mapping, "Relation mapping table (name<TAB>Class)");

  TrainConfig tc;
  std::vector<std::string> corpora, test_ids, dicts;
  std::string mode = "mono", sources, lrs = "0.01,0.02,0.03", decays = "1e-5,1e-6,1e-7,0", epochs = "1-20",
              beams = "1,2,4,8,16,32";
  bool fixed = false;
  auto* train_cmd = app.add_subcommand("train", "Train a parser, selecting hyperparameters on dev");
  train_cmd->add_option("--corpus", corpora, "Harmonized corpus as lang=dir (repeatable)")->required();
  train_cmd->add_option("--test-ids", test_ids, "Fixed test set as lang=file (repeatable)");
  train_cmd->add_option("--dict", dicts, "Bilingual dictionary as lang=file (repeatable)");
  train_cmd->add_option("--embeddings", tc.embeddings, "Cross-lingual word embeddings (text format)");
  train_cmd->add_option("--embedding-dims", tc.embedding_dims, "Embedding dimensions kept")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train_cmd->add_option("--target", tc.target, "Target language")->required();
  train_cmd->add_option("--sources", sources, "Comma-separated source languages");
  train_cmd->add_option("--mode", mode, "mono, cross-source-only or cross-plus-dev")->capture_default_str();
  train_cmd->add_option("--lr", lrs, "Learning rates")->capture_default_str();
  train_cmd->add_option("--decay", decays, "Learning-rate decay constants")->capture_default_str();
  train_cmd->add_option("--epochs", epochs, "Epoch counts (list or range a-b)")->capture_default_str();
  train_cmd->add_option("--beam", beams, "Beam widths")->capture_default_str();
  train_cmd->add_flag("--fixed", fixed, "Train the single given point without grid search");
  train_cmd->add_option("--seed", tc.seed, "Seed for splits, initialization and shuffling")->capture_default_str();
  train_cmd->add_option("--init-scale", tc.init_scale, "Half-width of the uniform initialization")
      ->capture_default_str();
  train_cmd->add_option("--model", tc.model_path, "Where to write the model");
  train_cmd->add_option("--report", tc.report_path, "Where to write the dev score table");

  ParseConfig pc;
  std::vector<std::string> parse_dicts;
  int parse_beam = 0;
  auto* parse_cmd = app.add_subcommand("parse", "Parse a harmonized corpus");
  parse_cmd->add_option("--model", pc.model_path, "Model file")->required();
  parse_cmd->add_option("--corpus", pc.corpus_dir, "Harmonized corpus directory")->required();
  parse_cmd->add_option("--out", pc.out_dir, "Output directory for trees")->required();
  parse_cmd->add_option("--beam", parse_beam, "Beam width (default: the model's)")->check(CLI::PositiveNumber);
  parse_cmd->add_option("--dict", parse_dicts, "Bilingual dictionary as lang=file (repeatable)");
  parse_cmd->add_flag("--trace", pc.trace, "Print the beam after every step");

  std::string pred_dir, gold_dir;
  auto* eval_cmd = app.add_subcommand("eval", "Score predicted trees against gold");
  eval_cmd->add_option("--pred", pred_dir, "Directory of predicted .tree files")->required();
  eval_cmd->add_option("--gold", gold_dir, "Harmonized gold corpus directory")->required();

  BaselineConfig bc;
  auto* baseline_cmd = app.add_subcommand("baseline", "Right-branching most-frequent-label baseline");
  baseline_cmd->add_option("--corpus", bc.corpus_dir, "Harmonized corpus directory")->required();
  baseline_cmd->add_option("--test-ids", bc.test_ids, "Fixed test set file");
  baseline_cmd->add_option("--seed", bc.seed, "Split seed");
  baseline_cmd->add_option("--out", bc.out_dir, "Output directory for trees");

  std::string oracle_dir;
  auto* oracle_cmd = app.add_subcommand("oracle-check", "Check that oracles replay to the gold trees");
  oracle_cmd->add_option("--corpus", oracle_dir, "Harmonized corpus directory")->required();

  std::vector<std::string> cov_corpora, cov_dicts;
  auto* coverage_cmd = app.add_subcommand("coverage", "Dictionary coverage per corpus");
  coverage_cmd->add_option("--corpus", cov_corpora, "Harmonized corpus as lang=dir (repeatable)")->required();
  coverage_cmd->add_option("--dict", cov_dicts, "Bilingual dictionary as lang=file (repeatable)");

  std::vector<const char*> cargs;
  for (const auto& a : args) cargs.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (harmonize->parsed()) {
      hc.drop_title.insert(drop_title.begin(), drop_title.end());
      cmd_harmonize(hc, out);
    } else if (train_cmd->parsed()) {
      tc.corpora = parse_lang_paths(corpora);
      tc.test_ids = parse_lang_paths(test_ids);
      tc.dictionaries = parse_lang_paths(dicts);
      tc.mode = parse_mode(mode);
      for (const auto& s : text::split(sources, ','))
        if (!text::trim(s).empty()) tc.sources.emplace_back(text::trim(s));
      tc.grid.learning_rates = parse_double_list(lrs);
      tc.grid.decays = parse_double_list(decays);
      tc.grid.epochs = parse_int_list(epochs);
      tc.grid.beams = parse_int_list(beams);
      for (int e : tc.grid.epochs)
        if (e < 1) throw UsageError("epoch counts must be positive");
      for (int b : tc.grid.beams)
        if (b < 1) throw UsageError("beam widths must be positive");
      if (fixed) {
        if (tc.grid.size() != 1) throw UsageError("--fixed needs exactly one value per hyperparameter");
        tc.fixed = Hyperparams{tc.grid.learning_rates[0], tc.grid.decays[0], tc.grid.epochs[0], tc.grid.beams[0],
                               tc.seed};
      }
      cmd_train(tc, out);
    } else if (parse_cmd->parsed()) {
      pc.dictionaries = parse_lang_paths(parse_dicts);
      if (parse_beam > 0) pc.beam = parse_beam;
      cmd_parse(pc, out);
    } else if (eval_cmd->parsed()) {
      cmd_eval(pred_dir, gold_dir, out);
    } else if (baseline_cmd->parsed()) {
      cmd_baseline(bc, out);
    } else if (oracle_cmd->parsed()) {
      if (cmd_oracle_check(oracle_dir, out) > 0) return kInvariantError;
    } else if (coverage_cmd->parsed()) {
      cmd_coverage(parse_lang_paths(cov_corpora), parse_lang_paths(cov_dicts), out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kInvariantError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kOk;
}

}  // namespace rst::cli
