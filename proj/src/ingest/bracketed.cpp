#include "rst/ingest/bracketed.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "rst/error.hpp"
#include "rst/text.hpp"

namespace rst {
namespace {

enum class Dialect { Dis, Lisp };

struct SExpr {
  bool is_list = false;
  bool is_text = false;
  std::string atom;
  std::vector<SExpr> items;
  std::size_t line = 1;
  std::size_t column = 1;
};

class SExprReader {
 public:
  SExprReader(std::string_view text, Dialect dialect) : text_(text), dialect_(dialect) {}

  SExpr read_document() {
    skip();
    if (pos_ >= text_.size()) fail("empty input");
    SExpr root = read();
    skip();
    if (pos_ < text_.size()) fail("trailing content after the tree");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, column_); }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (dialect_ == Dialect::Lisp && c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  SExpr read() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input, unbalanced brackets");
    SExpr node;
    node.line = line_;
    node.column = column_;
    char c = text_[pos_];
    if (c == ')') fail("unexpected ')'");
    if (c == '(') {
      advance();
      node.is_list = true;
      while (true) {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of input, unbalanced brackets");
        if (text_[pos_] == ')') {
          advance();
          break;
        }
        node.items.push_back(read());
      }
      return node;
    }
    if (dialect_ == Dialect::Dis && text_.substr(pos_, 2) == "_!") {
      advance();
      advance();
      std::size_t end = text_.find("_!", pos_);
      if (end == std::string_view::npos) fail("unterminated _! text");
      node.is_text = true;
      node.atom = std::string(text_.substr(pos_, end - pos_));
      while (pos_ < end + 2) advance();
      return node;
    }
    if (dialect_ == Dialect::Lisp && c == '"') {
      advance();
      node.is_text = true;
      while (true) {
        if (pos_ >= text_.size()) fail("unterminated string");
        char d = text_[pos_];
        if (d == '"') {
          advance();
          break;
        }
        if (d == '\\') {
          advance();
          if (pos_ >= text_.size()) fail("unterminated escape");
          d = text_[pos_];
        }
        node.atom += d;
        advance();
      }
      return node;
    }
    while (pos_ < text_.size()) {
      char d = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')') break;
      node.atom += d;
      advance();
    }
    return node;
  }

  std::string_view text_;
  Dialect dialect_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

[[noreturn]] void fail_at(const SExpr& e, const std::string& msg) {
  throw ParseError(msg, e.line, e.column);
}

std::string keyword(const SExpr& e) {
  if (!e.is_list || e.items.empty() || e.items[0].is_list || e.items[0].is_text) return {};
  return text::to_lower(e.items[0].atom);
}

std::optional<Role> role_keyword(const std::string& kw) {
  if (kw == "root") return Role::Root;
  if (kw == "nucleus") return Role::Nucleus;
  if (kw == "satellite") return Role::Satellite;
  return std::nullopt;
}

int parse_int(const SExpr& e) {
  if (e.is_list || e.is_text) fail_at(e, "expected a number");
  try {
    std::size_t used = 0;
    int v = std::stoi(e.atom, &used);
    if (used != e.atom.size()) fail_at(e, "expected a number, got '" + e.atom + "'");
    return v;
  } catch (const std::logic_error&) {
    fail_at(e, "expected a number, got '" + e.atom + "'");
  }
}

std::string normalize_relation(std::string name) {
  name = text::to_lower(name);
  if (name.size() > 2 && name.compare(name.size() - 2, 2, "-e") == 0) name.resize(name.size() - 2);
  return name;
}

RawNode build(const SExpr& e) {
  std::string kw = keyword(e);
  auto role = role_keyword(kw);
  if (!role) fail_at(e, "expected Root, Nucleus or Satellite node");

  RawNode node;
  node.role = *role;
  std::optional<int> leaf;
  bool has_span = false;
  bool has_text = false;
  for (std::size_t i = 1; i < e.items.size(); ++i) {
    const SExpr& item = e.items[i];
    std::string ikw = keyword(item);
    if (ikw == "span") {
      if (item.items.size() != 3) fail_at(item, "span needs two numbers");
      parse_int(item.items[1]);
      parse_int(item.items[2]);
      has_span = true;
    } else if (ikw == "leaf") {
      if (item.items.size() != 2) fail_at(item, "leaf needs one number");
      leaf = parse_int(item.items[1]);
      if (*leaf < 1) fail_at(item, "leaf numbers are 1-based");
    } else if (ikw == "rel2par") {
      if (item.items.size() != 2 || item.items[1].is_list) fail_at(item, "rel2par needs a name");
      node.relation = normalize_relation(item.items[1].atom);
    } else if (ikw == "text") {
      std::string joined;
      for (std::size_t j = 1; j < item.items.size(); ++j) {
        if (item.items[j].is_list) fail_at(item.items[j], "unexpected list inside text");
        if (!joined.empty()) joined += ' ';
        joined += item.items[j].atom;
      }
      node.text = std::move(joined);
      has_text = true;
    } else if (role_keyword(ikw)) {
      node.children.push_back(build(item));
    } else {
      fail_at(item, "unexpected element '" + ikw + "'");
    }
  }
  if (leaf) {
    if (!node.children.empty()) fail_at(e, "leaf node with children");
    node.position = *leaf - 1;
    node.source_id = std::to_string(*leaf);
  } else {
    if (!has_span) fail_at(e, "node without span or leaf");
    if (node.children.empty()) fail_at(e, "span node without children");
    if (has_text) fail_at(e, "text on a non-leaf node");
  }
  return node;
}

void write_node(const RawNode& node, Dialect dialect, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += "( ";
  out += to_string(node.role == Role::Unknown ? Role::Nucleus : node.role);
  if (node.is_leaf()) {
    out += " (leaf " + std::to_string(node.position + 1) + ")";
  } else {
    out += " (span " + std::to_string(raw_min_position(node) + 1) + " " +
           std::to_string(raw_max_position(node) + 1) + ")";
  }
  if (!node.relation.empty()) out += " (rel2par " + node.relation + ")";
  if (node.is_leaf()) {
    if (dialect == Dialect::Dis) {
      out += " (text _!" + node.text + "_!)";
    } else {
      out += " (text \"";
      for (char c : node.text) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
      }
      out += "\")";
    }
    out += " )\n";
    return;
  }
  out += '\n';
  for (const auto& c : node.children) write_node(c, dialect, depth + 1, out);
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += ")\n";
}

RawNode parse_with(std::string_view text, Dialect dialect) {
  SExprReader reader(text, dialect);
  SExpr root = reader.read_document();
  RawNode node = build(root);
  node.role = Role::Root;
  return node;
}

}  // namespace

RawNode parse_dis(std::string_view text) { return parse_with(text, Dialect::Dis); }

RawNode parse_lisp(std::string_view text) { return parse_with(text, Dialect::Lisp); }

std::string write_dis(const RawNode& root) {
  std::string out;
  write_node(root, Dialect::Dis, 0, out);
  return out;
}

std::string write_lisp(const RawNode& root) {
  std::string out;
  write_node(root, Dialect::Lisp, 0, out);
  return out;
}

}  // namespace rst
