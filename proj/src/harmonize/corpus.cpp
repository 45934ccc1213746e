#include "rst/harmonize/corpus.hpp"

#include <filesystem>

#include "rst/error.hpp"
#include "rst/ingest/conllu.hpp"
#include "rst/text.hpp"

namespace fs = std::filesystem;

namespace rst {
namespace {

std::string read_logged(const fs::path& path, AccessLog* log) {
  if (log) log->paths.push_back(path.string());
  return text::read_file(path.string());
}

std::string one_line(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  return out;
}

int parse_int(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + s + "'", line);
  }
}

}  // namespace

std::string file_stem(const std::string& id) {
  std::string out = id;
  for (char& c : out)
    if (c == '/' || c == '\\' || c == ':' || c == '\t') c = '_';
  return out;
}

std::string format_edus(const std::vector<Edu>& edus) {
  std::string out;
  for (const auto& e : edus) {
    out += std::to_string(e.index + 1) + '\t';
    if (e.tokens.empty())
      out += "-\t-\t";
    else
      out += std::to_string(e.tokens.begin + 1) + '\t' + std::to_string(e.tokens.end) + '\t';
    out += one_line(e.text) + '\n';
  }
  return out;
}

std::vector<Edu> parse_edus(std::string_view content) {
  std::vector<Edu> edus;
  std::size_t line_no = 0;
  for (const auto& line : text::split(content, '\n')) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    auto cols = text::split(line, '\t');
    if (cols.size() != 4) throw ParseError("expected 4 tab-separated columns", line_no);
    Edu e;
    e.index = parse_int(cols[0], line_no) - 1;
    if (cols[1] == "-" && cols[2] == "-") {
      e.tokens = Span{0, 0};
    } else {
      e.tokens = Span{parse_int(cols[1], line_no) - 1, parse_int(cols[2], line_no)};
    }
    e.text = cols[3];
    edus.push_back(std::move(e));
  }
  return edus;
}

void write_corpus(const std::string& dir, const std::vector<Document>& docs) {
  fs::create_directories(dir);
  std::string listing;
  for (const auto& doc : docs) {
    const fs::path base = fs::path(dir) / file_stem(doc.id);
    if (!doc.gold) throw DataError("document '" + doc.id + "' has no tree");
    text::write_file(base.string() + ".tree", to_bracketed(doc.gold->root()) + "\n");
    text::write_file(base.string() + ".edus", format_edus(doc.edus));
    text::write_file(base.string() + ".conllu", write_conllu(doc.tokens));
    listing += one_line(doc.id) + '\t' + doc.language + '\n';
  }
  text::write_file((fs::path(dir) / "corpus.tsv").string(), listing);
}

std::vector<Document> read_corpus(const std::string& dir, AccessLog* log) {
  const fs::path root(dir);
  std::vector<Document> docs;
  std::size_t line_no = 0;
  for (const auto& line : text::split(read_logged(root / "corpus.tsv", log), '\n')) {
    ++line_no;
    if (text::trim(line).empty() || line.front() == '#') continue;
    auto cols = text::split(line, '\t');
    if (cols.size() != 2) throw ParseError("expected id<TAB>language in corpus.tsv", line_no);
    Document doc;
    doc.id = cols[0];
    doc.language = std::string(text::trim(cols[1]));
    const fs::path base = root / file_stem(doc.id);
    if (fs::exists(base.string() + ".tree"))
      doc.gold = parse_bracketed(read_logged(base.string() + ".tree", log));
    doc.edus = parse_edus(read_logged(base.string() + ".edus", log));
    doc.tokens = load_conllu(read_logged(base.string() + ".conllu", log));
    if (doc.gold && doc.gold->edu_count() != doc.edu_count())
      throw DataError("document '" + doc.id + "': tree has " + std::to_string(doc.gold->edu_count()) +
                      " EDUs but the EDU file lists " + std::to_string(doc.edu_count()));
    docs.push_back(std::move(doc));
  }
  return docs;
}

void write_trees(const std::string& dir, const std::vector<std::string>& ids,
                 const std::vector<RstTree>& trees) {
  fs::create_directories(dir);
  for (std::size_t i = 0; i < ids.size(); ++i)
    text::write_file((fs::path(dir) / (file_stem(ids[i]) + ".tree")).string(),
                     to_bracketed(trees.at(i).root()) + "\n");
}

std::vector<RstTree> read_trees(const std::string& dir, const std::vector<std::string>& ids,
                                AccessLog* log) {
  std::vector<RstTree> trees;
  for (const auto& id : ids)
    trees.push_back(parse_bracketed(read_logged(fs::path(dir) / (file_stem(id) + ".tree"), log)));
  return trees;
}

}  // namespace rst
