#include "rst/core/tree.hpp"

#include <algorithm>
#include <cctype>

#include "rst/error.hpp"

namespace rst {

NodePtr RstNode::leaf(int edu) {
  auto node = std::shared_ptr<RstNode>(new RstNode());
  node->span_ = Span{edu, edu + 1};
  node->head_ = edu;
  node->leaves_ = 1;
  return node;
}

NodePtr RstNode::internal(NodePtr left, NodePtr right, Label label) {
  if (!left || !right) throw InvariantError("internal node needs two children");
  auto node = std::shared_ptr<RstNode>(new RstNode());
  node->span_ = Span{std::min(left->span_.begin, right->span_.begin),
                     std::max(left->span_.end, right->span_.end)};
  node->head_ = label.nuclearity == Nuclearity::SN ? right->head_ : left->head_;
  node->leaves_ = left->leaves_ + right->leaves_;
  node->label_ = label;
  node->left_ = std::move(left);
  node->right_ = std::move(right);
  return node;
}

bool operator==(const RstNode& a, const RstNode& b) {
  if (&a == &b) return true;
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.edu() == b.edu();
  return a.label() == b.label() && a.span() == b.span() && a.left() == b.left() &&
         a.right() == b.right();
}

RstTree::RstTree(NodePtr root) : root_(std::move(root)) {
  if (!root_) throw InvariantError("tree without root");
}

Span span_of(const RstNode& node) { return node.span(); }

int head_edu(const RstNode& node) { return node.head(); }

namespace {

void collect_leaves(const RstNode& node, std::vector<int>& out) {
  if (node.is_leaf()) {
    out.push_back(node.edu());
    return;
  }
  collect_leaves(node.left(), out);
  collect_leaves(node.right(), out);
}

void collect_internal(const RstNode& node, std::vector<const RstNode*>& out) {
  if (node.is_leaf()) return;
  collect_internal(node.left(), out);
  collect_internal(node.right(), out);
  out.push_back(&node);
}

std::string span_text(Span s) {
  return "[" + std::to_string(s.begin + 1) + "-" + std::to_string(s.end) + "]";
}

}  // namespace

std::vector<int> leaf_sequence(const RstNode& root) {
  std::vector<int> out;
  collect_leaves(root, out);
  return out;
}

std::vector<const RstNode*> internal_nodes(const RstNode& root) {
  std::vector<const RstNode*> out;
  collect_internal(root, out);
  return out;
}

std::vector<Violation> validate_tree(const RstNode& root, int n_edus) {
  std::vector<Violation> out;
  for (const RstNode* node : internal_nodes(root)) {
    if (node->left().span().end != node->right().span().begin) {
      out.push_back({Violation::Kind::NonAdjacentSpan,
                     "non-adjacent span: " + span_text(node->left().span()) + " and " +
                         span_text(node->right().span())});
    }
    if (node->label().nuclearity == Nuclearity::SS) {
      out.push_back({Violation::Kind::TwoSatellites,
                     "two satellites at node " + span_text(node->span())});
    }
  }
  const std::vector<int> leaves = leaf_sequence(root);
  bool exact = static_cast<int>(leaves.size()) == n_edus;
  for (std::size_t i = 0; exact && i < leaves.size(); ++i)
    exact = leaves[i] == static_cast<int>(i);
  if (!exact) {
    out.push_back({Violation::Kind::Coverage,
                   "leaves do not cover EDUs 1.." + std::to_string(n_edus) +
                       " exactly once in order"});
  }
  return out;
}

namespace {

void write_bracketed(const RstNode& node, std::string& out) {
  if (node.is_leaf()) {
    out += "(EDU ";
    out += std::to_string(node.edu() + 1);
    out += ')';
    return;
  }
  out += '(';
  out += to_string(node.label());
  out += ' ';
  write_bracketed(node.left(), out);
  out += ' ';
  write_bracketed(node.right(), out);
  out += ')';
}

class BracketReader {
 public:
  explicit BracketReader(std::string_view text) : text_(text) {}

  NodePtr read_node() {
    skip_ws();
    expect('(');
    std::string head = read_atom();
    NodePtr node;
    if (head == "EDU") {
      std::string num = read_atom();
      int k = 0;
      try {
        k = std::stoi(num);
      } catch (const std::exception&) {
        fail("bad EDU number '" + num + "'");
      }
      if (k < 1) fail("EDU numbers are 1-based");
      node = RstNode::leaf(k - 1);
    } else {
      Label label;
      try {
        label = parse_label(head);
      } catch (const DataError& e) {
        fail(e.what());
      }
      NodePtr left = read_node();
      NodePtr right = read_node();
      node = RstNode::internal(std::move(left), std::move(right), label);
    }
    skip_ws();
    expect(')');
    return node;
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) fail("trailing content after tree");
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string read_atom() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')')
      ++pos_;
    if (pos_ == start) fail("expected an atom");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_bracketed(const RstNode& root) {
  std::string out;
  write_bracketed(root, out);
  return out;
}

RstTree parse_bracketed(std::string_view text) {
  BracketReader reader(text);
  NodePtr root = reader.read_node();
  reader.finish();
  return RstTree(std::move(root));
}

}  // namespace rst
