#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace rst {

// Role of a node with respect to its parent.
enum class Role : std::uint8_t { Unknown, Root, Nucleus, Satellite };

std::string_view to_string(Role role);

// Source-format tree of arbitrary arity.
//
// As read from the corpora, relations sit on the daughters (`relation`): on
// the satellite of a mono-nuclear relation, on every nucleus of a
// multi-nuclear one, and "span" on the nucleus of a mono-nuclear relation.
// lift_relations() moves them onto the parent: `label` is the node relation
// and `links[i]` the relation linking child i ("" for a mono-nuclear
// nucleus), which is what binarization of shared-nucleus nodes needs.
struct RawNode {
  Role role = Role::Root;
  std::string relation;
  std::string label;
  std::vector<std::string> links;
  std::vector<RawNode> children;

  // Leaves: document-order segment index, id in the source file, text.
  int position = -1;
  std::string source_id;
  std::string text;

  bool is_leaf() const noexcept { return children.empty(); }

  friend bool operator==(const RawNode&, const RawNode&) = default;
};

RawNode make_raw_leaf(int position, std::string source_id, std::string text);

// Leaf positions in left-to-right child order.
std::vector<int> raw_leaf_positions(const RawNode& node);
int raw_min_position(const RawNode& node);
int raw_max_position(const RawNode& node);

// Leaves in left-to-right child order.
std::vector<const RawNode*> raw_leaves(const RawNode& node);

// Relation type declared in an rs3 header. A name may be declared both ways.
struct RelationType {
  bool mono = false;
  bool multi = false;
};

using RelationTypeTable = std::map<std::string, RelationType>;

// Resolves Unknown roles from daughter relations: "span" and multi-nuclear
// relations mark nuclei, mono-nuclear relations mark satellites. A name
// declared both ways is mono-nuclear when a "span" sibling exists.
// Throws DataError when a relation is missing from the table.
RawNode derive_nuclearity(const RawNode& raw, const RelationTypeTable& table);

// Moves daughter relations onto parents (see RawNode) and collapses unary
// nodes. Requires resolved roles. Throws DataError on nodes without a
// nucleus, on a binary mono-nuclear node whose nucleus carries a non-span
// relation, and on nodes mixing several nuclei with satellites.
RawNode lift_relations(const RawNode& raw);

// Reorders children so that every node covers adjacent positions, trying
// sibling permutations for nodes of arity <= 8. Throws DataError naming the
// offending node when no order works.
RawNode reorder_siblings(const RawNode& raw);

// Removes the leaf at `position`, collapsing parents left unary. Throws
// DataError if that would empty the tree.
RawNode remove_leaf(const RawNode& raw, int position);

// Renumbers leaf positions densely from 0, preserving document order.
RawNode renumber_leaves(const RawNode& raw);

}  // namespace rst
