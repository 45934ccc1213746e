#pragma once

#include <string>
#include <vector>

#include "rst/core/relation.hpp"
#include "rst/core/tree.hpp"
#include "rst/harmonize/label_mapping.hpp"
#include "rst/ingest/raw_tree.hpp"

namespace rst {

// Binary tree still carrying corpus relation names.
struct BinaryRawNode {
  int position = -1;  // leaves
  Nuclearity nuclearity = Nuclearity::NN;
  std::string relation;
  std::vector<BinaryRawNode> children;  // empty or exactly two

  bool is_leaf() const noexcept { return children.empty(); }
  friend bool operator==(const BinaryRawNode&, const BinaryRawNode&) = default;
};

// Turns a lifted n-ary tree into a binary one.
//
// Multi-nuclear nodes branch to the right with the same relation at every
// created node. A shared-nucleus node first attaches the satellites that
// follow the nucleus one by one to its right (left-branching), then the
// satellites before it (right-branching), so (S1, N2, S3, S4) gives
// SN-R1(S1, NS-R4(NS-R3(N2, S3), S4)). Whenever at most one satellite
// follows the nucleus this is plain right-branching. Throws DataError when a
// node has no nucleus or mixes several nuclei with satellites.
BinaryRawNode binarize(const RawNode& lifted);

// Maps relation names to classes. Leaf positions must already be dense.
RstTree map_labels(const BinaryRawNode& root, const LabelMapping& mapping);

// binarize, map_labels, then validate_tree over the tree's own leaf count.
// Throws DataError if validation fails.
RstTree harmonize_tree(const RawNode& lifted, const LabelMapping& mapping);

std::string to_bracketed(const BinaryRawNode& root);

}  // namespace rst
