#include "rst/harmonize/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <map>

#include "rst/harmonize/binarize.hpp"
#include "rst/ingest/align.hpp"
#include "rst/ingest/bracketed.hpp"
#include "rst/ingest/conllu.hpp"
#include "rst/ingest/rs3.hpp"
#include "rst/text.hpp"

namespace fs = std::filesystem;

namespace rst {
namespace {

struct Source {
  RawNode tree;
  std::vector<std::string> segments;  // by original position
  std::vector<std::string> warnings;
};

Source read_bracketed(TreeFormat format, const std::string& text, bool drop_title) {
  Source src;
  src.tree = format == TreeFormat::Dis ? parse_dis(text) : parse_lisp(text);
  auto leaves = raw_leaves(src.tree);
  src.segments.resize(leaves.size());
  std::vector<bool> seen(leaves.size(), false);
  for (const RawNode* leaf : leaves) {
    const int p = leaf->position;
    if (p < 0 || p >= static_cast<int>(leaves.size()) || seen[p])
      throw DataError("leaf numbers are not a permutation of 1.." + std::to_string(leaves.size()));
    seen[p] = true;
    src.segments[p] = leaf->text;
  }
  if (drop_title) {
    if (leaves.size() < 2) throw DataError("document holds nothing but its title");
    src.tree = remove_leaf(src.tree, 0);
    src.warnings.push_back("dropped title segment");
  }
  return src;
}

Source read_rs3(const std::string& text, bool drop_title) {
  Rs3Document doc = parse_rs3(text, Rs3Options{drop_title});
  Source src;
  src.tree = derive_nuclearity(doc.tree, doc.relations);
  for (const auto& seg : doc.segments) src.segments.push_back(seg.text);
  src.warnings = std::move(doc.warnings);
  return src;
}

void collect_labels(const BinaryRawNode& node, HarmonizedDocument& out) {
  if (node.is_leaf()) return;
  out.relations.insert(node.relation);
  out.labels.insert(std::string(to_string(node.nuclearity)) + "-" + node.relation);
  for (const auto& c : node.children) collect_labels(c, out);
}

std::vector<Span> align(const std::vector<std::string>& segments, const std::vector<int>& kept,
                        const std::vector<SurfaceUnit>& surface) {
  std::vector<int> nonempty;
  for (std::size_t i = 0; i < segments.size(); ++i)
    if (!text::strip_whitespace(segments[i]).empty()) nonempty.push_back(static_cast<int>(i));

  auto run = [&](const std::vector<int>& which) {
    std::vector<std::string> texts;
    for (int i : which) texts.push_back(segments[i]);
    std::vector<Span> spans = align_edus(texts, surface);
    std::vector<Span> out;
    for (int k : kept) {
      auto it = std::find(which.begin(), which.end(), k);
      if (it == which.end()) throw DataError("segment " + std::to_string(k + 1) + " has empty text");
      out.push_back(spans[it - which.begin()]);
    }
    return out;
  };

  try {
    return run(nonempty);
  } catch (const DataError& first) {
    if (nonempty == kept) throw;
    try {
      return run(kept);
    } catch (const DataError&) {
      throw first;
    }
  }
}

}  // namespace

std::vector<ManifestEntry> read_manifest(const std::string& path) {
  const fs::path base = fs::path(path).parent_path();
  auto resolve = [&](const std::string& p) {
    if (p == "-" || fs::path(p).is_absolute()) return p;
    return (base / p).lexically_normal().string();
  };
  std::vector<ManifestEntry> entries;
  std::size_t line_no = 0;
  for (const auto& line : text::split(text::read_file(path), '\n')) {
    ++line_no;
    std::string_view l = text::trim(line);
    if (l.empty() || l.front() == '#') continue;
    auto cols = text::split(l, '\t');
    if (cols.size() != 4) throw ParseError("expected id, tree file, conllu file, language", line_no);
    for (auto& c : cols) c = std::string(text::trim(c));
    entries.push_back(ManifestEntry{cols[0], resolve(cols[1]), resolve(cols[2]), cols[3]});
  }
  return entries;
}

TreeFormat format_of(const std::string& path) {
  std::string ext = text::to_lower(fs::path(path).extension().string());
  if (ext == ".dis") return TreeFormat::Dis;
  if (ext == ".lisp" || ext == ".rst") return TreeFormat::Lisp;
  if (ext == ".rs3") return TreeFormat::Rs3;
  throw DataError("unknown tree format for '" + path + "'");
}

HarmonizedDocument harmonize_document(const ManifestEntry& entry, const LabelMapping& mapping,
                                      const HarmonizeOptions& options) {
  const std::string conllu = entry.conllu_path == "-" ? std::string() : text::read_file(entry.conllu_path);
  return harmonize_document(entry.id, entry.language, format_of(entry.tree_path),
                            text::read_file(entry.tree_path), conllu, mapping, options);
}

HarmonizedDocument harmonize_document(const std::string& id, const std::string& language,
                                      TreeFormat format, const std::string& tree_text,
                                      const std::string& conllu, const LabelMapping& mapping,
                                      const HarmonizeOptions& options) {
  const bool drop_title = options.drop_title.count(language) > 0;
  Source src = format == TreeFormat::Rs3 ? read_rs3(tree_text, drop_title)
                                         : read_bracketed(format, tree_text, drop_title);

  RawNode lifted = lift_relations(src.tree);
  std::vector<int> kept = raw_leaf_positions(lifted);
  std::sort(kept.begin(), kept.end());
  RawNode ordered = reorder_siblings(renumber_leaves(lifted));
  BinaryRawNode binary = binarize(ordered);

  HarmonizedDocument out;
  out.warnings = std::move(src.warnings);
  collect_labels(binary, out);

  RstTree tree = map_labels(binary, mapping);
  if (auto v = validate_tree(tree.root(), static_cast<int>(kept.size())); !v.empty())
    throw DataError("harmonized tree is invalid: " + v.front().message);

  Document& doc = out.doc;
  doc.id = id;
  doc.language = language;
  std::vector<Span> spans(kept.size(), Span{0, 0});
  if (!conllu.empty()) {
    ConlluDocument parsed = parse_conllu(conllu);
    spans = align(src.segments, kept, parsed.surface);
    doc.tokens = std::move(parsed.tokens);
  } else {
    out.warnings.push_back("no token layer");
  }
  for (std::size_t k = 0; k < kept.size(); ++k)
    doc.edus.push_back(Edu{static_cast<int>(k), std::string(text::trim(src.segments[kept[k]])), spans[k]});
  doc.gold = std::move(tree);
  return out;
}

CorpusStats compute_stats(int manifest_docs, const std::vector<HarmonizedDocument>& docs) {
  CorpusStats s;
  s.docs = manifest_docs;
  s.trees = static_cast<int>(docs.size());
  std::set<std::string> relations;
  std::set<std::string> labels;
  for (const auto& h : docs) {
    const int n = h.doc.edu_count();
    s.edus += n;
    s.cdus += n - 1;
    const bool first = &h == &docs.front();
    s.max_edus = first ? n : std::max(s.max_edus, n);
    s.min_edus = first ? n : std::min(s.min_edus, n);
    for (const auto& e : h.doc.edus) {
      s.words += e.tokens.size() > 0 ? e.tokens.size() : static_cast<int>(text::split_ws(e.text).size());
    }
    relations.insert(h.relations.begin(), h.relations.end());
    labels.insert(h.labels.begin(), h.labels.end());
  }
  s.avg_edus = s.trees ? static_cast<double>(s.edus) / s.trees : 0.0;
  s.relations = static_cast<int>(relations.size());
  s.labels = static_cast<int>(labels.size());
  return s;
}

std::string format_stats(const std::vector<std::pair<std::string, CorpusStats>>& rows) {
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-10s %6s %6s %7s %7s %5s %5s %7s %8s %5s %5s\n", "Corpus", "#Docs",
                "#Trees", "#EDU", "#CDU", "max", "min", "avg", "#Words", "#Rel", "#Lab");
  out += buf;
  for (const auto& [name, s] : rows) {
    std::snprintf(buf, sizeof buf, "%-10s %6d %6d %7ld %7ld %5d %5d %7.1f %8ld %5d %5d\n", name.c_str(),
                  s.docs, s.trees, s.edus, s.cdus, s.max_edus, s.min_edus, s.avg_edus, s.words,
                  s.relations, s.labels);
    out += buf;
  }
  return out;
}

}  // namespace rst
