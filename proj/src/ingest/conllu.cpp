#include "rst/ingest/conllu.hpp"

#include "rst/error.hpp"
#include "rst/text.hpp"

namespace rst {
namespace {

int parse_field_int(const std::string& s, std::size_t line, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw ParseError(std::string("bad ") + what + " '" + s + "'", line);
}

struct PendingSentence {
  int first_token = 0;
  std::vector<int> relative_heads;
};

}  // namespace

ConlluDocument parse_conllu(std::string_view input) {
  ConlluDocument doc;
  int sentence = 0;
  bool sentence_open = false;
  PendingSentence pending;
  int multiword_end = 0;  // last word id covered by the current multiword range

  auto close_sentence = [&](std::size_t line) {
    if (!sentence_open) return;
    const int n = static_cast<int>(pending.relative_heads.size());
    for (int i = 0; i < n; ++i) {
      int h = pending.relative_heads[static_cast<std::size_t>(i)];
      Token& tok = doc.tokens[static_cast<std::size_t>(pending.first_token + i)];
      if (h == 0) {
        tok.head = kRootHead;
      } else if (h < 1 || h > n) {
        throw ParseError("head " + std::to_string(h) + " outside sentence", line);
      } else {
        tok.head = pending.first_token + h - 1;
      }
    }
    ++sentence;
    sentence_open = false;
    pending = PendingSentence{};
    multiword_end = 0;
  };

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= input.size()) {
    std::size_t end = input.find('\n', start);
    if (end == std::string_view::npos) end = input.size();
    std::string_view raw = input.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

    if (text::trim(raw).empty()) {
      close_sentence(line_no);
      if (end == input.size()) break;
      continue;
    }
    if (raw.front() == '#') continue;

    std::vector<std::string> cols = text::split(raw, '\t');
    if (cols.size() != 10)
      throw ParseError("expected 10 tab-separated columns, got " + std::to_string(cols.size()),
                       line_no);
    const std::string& id = cols[0];
    if (id.find('.') != std::string::npos) continue;
    if (!sentence_open) {
      sentence_open = true;
      pending.first_token = static_cast<int>(doc.tokens.size());
    }
    if (auto dash = id.find('-'); dash != std::string::npos) {
      int a = parse_field_int(id.substr(0, dash), line_no, "token range");
      int b = parse_field_int(id.substr(dash + 1), line_no, "token range");
      if (b < a) throw ParseError("bad token range " + id, line_no);
      const int first = pending.first_token + a - 1;
      doc.surface.push_back(SurfaceUnit{text::nfc(cols[1]), Span{first, first + (b - a + 1)}});
      multiword_end = b;
      continue;
    }
    int word_id = parse_field_int(id, line_no, "token id");
    if (word_id != static_cast<int>(pending.relative_heads.size()) + 1)
      throw ParseError("token id " + id + " out of sequence", line_no);
    int head = parse_field_int(cols[6], line_no, "head");

    Token tok;
    tok.form = text::nfc(cols[1]);
    tok.lemma = cols[2] == "_" ? tok.form : text::nfc(cols[2]);
    tok.pos = cols[3];
    tok.sentence = sentence;
    doc.tokens.push_back(tok);
    pending.relative_heads.push_back(head);
    if (word_id > multiword_end) {
      const int index = static_cast<int>(doc.tokens.size()) - 1;
      doc.surface.push_back(SurfaceUnit{tok.form, Span{index, index + 1}});
    }
    if (end == input.size()) break;
  }
  close_sentence(line_no);

  for (const auto& unit : doc.surface) {
    if (unit.tokens.end > static_cast<int>(doc.tokens.size()))
      throw ParseError("multiword range past the end of its sentence", line_no);
  }
  return doc;
}

std::vector<Token> load_conllu(std::string_view text) { return parse_conllu(text).tokens; }

std::string write_conllu(const std::vector<Token>& tokens) {
  std::string out;
  int sentence_start = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& tok = tokens[i];
    if (i > 0 && tok.sentence != tokens[i - 1].sentence) {
      out += '\n';
      sentence_start = static_cast<int>(i);
    }
    const int id = static_cast<int>(i) - sentence_start + 1;
    const int head = tok.head == kRootHead ? 0 : tok.head - sentence_start + 1;
    out += std::to_string(id) + '\t' + tok.form + '\t' + tok.lemma + '\t' + tok.pos + "\t_\t_\t" +
           std::to_string(head) + '\t' + (head == 0 ? "root" : "dep") + "\t_\t_\n";
  }
  if (!tokens.empty()) out += '\n';
  return out;
}

}  // namespace rst
