#include "rst/harmonize/binarize.hpp"

#include "rst/error.hpp"

namespace rst {
namespace {

BinaryRawNode combine(BinaryRawNode left, BinaryRawNode right, Nuclearity nuc, std::string rel) {
  BinaryRawNode node;
  node.nuclearity = nuc;
  node.relation = std::move(rel);
  node.children.push_back(std::move(left));
  node.children.push_back(std::move(right));
  return node;
}

NodePtr to_rst(const BinaryRawNode& node, const LabelMapping& mapping) {
  if (node.is_leaf()) return RstNode::leaf(node.position);
  return RstNode::internal(to_rst(node.children[0], mapping), to_rst(node.children[1], mapping),
                           Label{node.nuclearity, map_label(node.relation, mapping)});
}

void write(const BinaryRawNode& node, std::string& out) {
  if (node.is_leaf()) {
    out += "(EDU " + std::to_string(node.position + 1) + ")";
    return;
  }
  out += "(" + std::string(to_string(node.nuclearity)) + "-" + node.relation + " ";
  write(node.children[0], out);
  out += ' ';
  write(node.children[1], out);
  out += ')';
}

}  // namespace

BinaryRawNode binarize(const RawNode& node) {
  if (node.is_leaf()) {
    BinaryRawNode leaf;
    leaf.position = node.position;
    return leaf;
  }
  if (node.children.size() == 1) return binarize(node.children.front());
  if (node.links.size() != node.children.size())
    throw InvariantError("binarize needs a lifted tree");

  const std::size_t k = node.children.size();
  std::vector<std::size_t> nuclei;
  for (std::size_t i = 0; i < k; ++i)
    if (node.children[i].role == Role::Nucleus) nuclei.push_back(i);
  if (nuclei.empty()) throw DataError("cannot binarize a node without nucleus");

  std::vector<BinaryRawNode> parts;
  parts.reserve(k);
  for (const auto& c : node.children) parts.push_back(binarize(c));

  if (nuclei.size() == k) {
    BinaryRawNode acc = std::move(parts[k - 1]);
    for (std::size_t i = k - 1; i-- > 0;)
      acc = combine(std::move(parts[i]), std::move(acc), Nuclearity::NN, node.label);
    return acc;
  }
  if (nuclei.size() != 1)
    throw DataError("cannot binarize a node mixing several nuclei with satellites");

  const std::size_t j = nuclei.front();
  BinaryRawNode acc = std::move(parts[j]);
  for (std::size_t i = j + 1; i < k; ++i)
    acc = combine(std::move(acc), std::move(parts[i]), Nuclearity::NS, node.links[i]);
  for (std::size_t i = j; i-- > 0;)
    acc = combine(std::move(parts[i]), std::move(acc), Nuclearity::SN, node.links[i]);
  return acc;
}

RstTree map_labels(const BinaryRawNode& root, const LabelMapping& mapping) {
  return RstTree(to_rst(root, mapping));
}

RstTree harmonize_tree(const RawNode& lifted, const LabelMapping& mapping) {
  RstTree tree = map_labels(binarize(lifted), mapping);
  auto violations = validate_tree(tree.root(), tree.edu_count());
  if (!violations.empty()) throw DataError("harmonized tree is invalid: " + violations.front().message);
  return tree;
}

std::string to_bracketed(const BinaryRawNode& root) {
  std::string out;
  write(root, out);
  return out;
}

}  // namespace rst
