#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rst/core/relation.hpp"

namespace rst {

// Half-open interval [begin, end). Used both for EDU spans of tree nodes and
// for token spans of EDUs.
struct Span {
  int begin = 0;
  int end = 0;

  int size() const noexcept { return end - begin; }
  bool empty() const noexcept { return end <= begin; }
  bool contains(int i) const noexcept { return i >= begin && i < end; }

  friend bool operator==(const Span&, const Span&) = default;
  friend auto operator<=>(const Span&, const Span&) = default;
};

class RstNode;
using NodePtr = std::shared_ptr<const RstNode>;

// Immutable binary RST node: either a leaf over one EDU or an internal node
// with two children, a nuclearity pattern and a relation class. Subtrees are
// shared, so partial trees built during beam search cost nothing to copy.
class RstNode {
 public:
  static NodePtr leaf(int edu);
  static NodePtr internal(NodePtr left, NodePtr right, Label label);

  bool is_leaf() const noexcept { return left_ == nullptr; }

  // Leaf only.
  int edu() const noexcept { return span_.begin; }

  // Internal only.
  const RstNode& left() const noexcept { return *left_; }
  const RstNode& right() const noexcept { return *right_; }
  const NodePtr& left_ptr() const noexcept { return left_; }
  const NodePtr& right_ptr() const noexcept { return right_; }
  const Label& label() const noexcept { return label_; }

  // Minimal interval covering every leaf below this node.
  Span span() const noexcept { return span_; }

  // Head EDU following nuclei downwards; NN takes the left nucleus.
  int head() const noexcept { return head_; }

  int leaf_count() const noexcept { return leaves_; }

 private:
  RstNode() = default;

  NodePtr left_;
  NodePtr right_;
  Label label_{};
  Span span_{};
  int head_ = 0;
  int leaves_ = 1;
};

bool operator==(const RstNode& a, const RstNode& b);

class RstTree {
 public:
  explicit RstTree(NodePtr root);

  const RstNode& root() const noexcept { return *root_; }
  const NodePtr& root_ptr() const noexcept { return root_; }
  int edu_count() const noexcept { return root_->leaf_count(); }

  friend bool operator==(const RstTree& a, const RstTree& b) { return *a.root_ == *b.root_; }

 private:
  NodePtr root_;
};

Span span_of(const RstNode& node);
int head_edu(const RstNode& node);

struct Violation {
  enum class Kind { NonAdjacentSpan, TwoSatellites, Coverage };
  Kind kind;
  std::string message;
};

// Reports every problem found; an empty result means the tree is a valid
// binary tree over exactly the EDUs [0, n_edus).
std::vector<Violation> validate_tree(const RstNode& root, int n_edus);

// Leaf EDU indices in left-to-right order.
std::vector<int> leaf_sequence(const RstNode& root);

// Internal nodes in post-order.
std::vector<const RstNode*> internal_nodes(const RstNode& root);

// Bracketed form: "(NS-Attribution (NN-Comparison (EDU 1) (EDU 2)) (EDU 3))".
// EDU numbers are 1-based on the wire and 0-based in memory.
std::string to_bracketed(const RstNode& root);
RstTree parse_bracketed(std::string_view text);

}  // namespace rst
