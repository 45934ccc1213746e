#include "rst/ingest/raw_tree.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "rst/error.hpp"

namespace rst {

std::string_view to_string(Role role) {
  switch (role) {
    case Role::Unknown: return "Unknown";
    case Role::Root: return "Root";
    case Role::Nucleus: return "Nucleus";
    case Role::Satellite: return "Satellite";
  }
  return "?";
}

RawNode make_raw_leaf(int position, std::string source_id, std::string text) {
  RawNode leaf;
  leaf.position = position;
  leaf.source_id = std::move(source_id);
  leaf.text = std::move(text);
  return leaf;
}

namespace {

void collect_positions(const RawNode& node, std::vector<int>& out) {
  if (node.is_leaf()) {
    out.push_back(node.position);
    return;
  }
  for (const auto& c : node.children) collect_positions(c, out);
}

void collect_leaves(const RawNode& node, std::vector<const RawNode*>& out) {
  if (node.is_leaf()) {
    out.push_back(&node);
    return;
  }
  for (const auto& c : node.children) collect_leaves(c, out);
}

std::string describe(const RawNode& node) {
  std::vector<int> pos = raw_leaf_positions(node);
  std::string out = "node over segments";
  for (int p : pos) out += " " + std::to_string(p + 1);
  return out;
}

bool contiguous(const RawNode& node) {
  std::vector<int> pos = raw_leaf_positions(node);
  std::sort(pos.begin(), pos.end());
  for (std::size_t i = 1; i < pos.size(); ++i)
    if (pos[i] != pos[i - 1] + 1) return false;
  return true;
}

bool chains(const std::vector<RawNode>& children, const std::vector<std::size_t>& order) {
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (raw_min_position(children[order[i]]) != raw_max_position(children[order[i - 1]]) + 1)
      return false;
  }
  return true;
}

std::optional<RawNode> remove_leaf_impl(const RawNode& node, int position) {
  if (node.is_leaf()) {
    if (node.position == position) return std::nullopt;
    return node;
  }
  RawNode out = node;
  out.children.clear();
  out.links.clear();
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (auto kept = remove_leaf_impl(node.children[i], position)) {
      out.children.push_back(std::move(*kept));
      if (i < node.links.size()) out.links.push_back(node.links[i]);
    }
  }
  if (out.children.empty()) return std::nullopt;
  if (out.children.size() == 1) {
    RawNode only = std::move(out.children.front());
    only.role = node.role;
    only.relation = node.relation;
    return only;
  }
  return out;
}

void renumber_impl(RawNode& node, const std::vector<int>& sorted) {
  if (node.is_leaf()) {
    node.position = static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), node.position) - sorted.begin());
    return;
  }
  for (auto& c : node.children) renumber_impl(c, sorted);
}

}  // namespace

std::vector<int> raw_leaf_positions(const RawNode& node) {
  std::vector<int> out;
  collect_positions(node, out);
  return out;
}

int raw_min_position(const RawNode& node) {
  std::vector<int> p = raw_leaf_positions(node);
  return *std::min_element(p.begin(), p.end());
}

int raw_max_position(const RawNode& node) {
  std::vector<int> p = raw_leaf_positions(node);
  return *std::max_element(p.begin(), p.end());
}

std::vector<const RawNode*> raw_leaves(const RawNode& node) {
  std::vector<const RawNode*> out;
  collect_leaves(node, out);
  return out;
}

RawNode derive_nuclearity(const RawNode& raw, const RelationTypeTable& table) {
  RawNode out = raw;
  if (out.is_leaf()) return out;
  bool has_span_child = false;
  for (const auto& c : raw.children) has_span_child |= c.relation == "span";
  for (auto& c : out.children) {
    if (c.relation == "span") {
      c.role = Role::Nucleus;
    } else {
      auto it = table.find(c.relation);
      if (it == table.end())
        throw DataError("relation '" + c.relation + "' is not declared in the file header");
      const RelationType& type = it->second;
      bool mono = type.mono && (has_span_child || !type.multi);
      c.role = mono ? Role::Satellite : Role::Nucleus;
    }
    Role role = c.role;
    c = derive_nuclearity(c, table);
    c.role = role;
  }
  return out;
}

RawNode lift_relations(const RawNode& raw) {
  if (raw.is_leaf()) {
    RawNode out = raw;
    out.relation.clear();
    return out;
  }
  if (raw.children.size() == 1) {
    RawNode out = lift_relations(raw.children.front());
    out.role = raw.role;
    return out;
  }

  RawNode out;
  out.role = raw.role;
  std::size_t nuclei = 0;
  std::size_t satellites = 0;
  for (const auto& c : raw.children) {
    if (c.role == Role::Nucleus) ++nuclei;
    else if (c.role == Role::Satellite) ++satellites;
    else throw DataError("unresolved nuclearity in " + describe(raw));
  }
  if (nuclei == 0) throw DataError("no nucleus in " + describe(raw));
  if (nuclei > 1 && satellites > 0)
    throw DataError("several nuclei mixed with satellites in " + describe(raw));

  if (satellites == 0) {
    std::string relation;
    for (const auto& c : raw.children) {
      if (!c.relation.empty() && c.relation != "span") {
        relation = c.relation;
        break;
      }
    }
    if (relation.empty()) throw DataError("multi-nuclear node without relation in " + describe(raw));
    out.label = relation;
    out.links.assign(raw.children.size(), relation);
  } else {
    for (const auto& c : raw.children) {
      if (c.role == Role::Nucleus && !c.relation.empty() && c.relation != "span") {
        throw DataError("conflicting sibling relations '" + c.relation + "' on the nucleus in " +
                        describe(raw));
      }
      if (c.role == Role::Satellite && c.relation.empty())
        throw DataError("satellite without relation in " + describe(raw));
      out.links.push_back(c.role == Role::Satellite ? c.relation : std::string());
      if (out.label.empty() && c.role == Role::Satellite) out.label = c.relation;
    }
  }
  for (const auto& c : raw.children) {
    RawNode lifted = lift_relations(c);
    lifted.role = c.role;
    out.children.push_back(std::move(lifted));
  }
  return out;
}

RawNode reorder_siblings(const RawNode& raw) {
  if (raw.is_leaf()) return raw;
  RawNode out = raw;
  for (auto& c : out.children) c = reorder_siblings(c);
  if (!contiguous(out)) throw DataError("non-adjacent span: " + describe(out));

  const std::size_t k = out.children.size();
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  bool found = chains(out.children, order);
  if (!found && k <= 8) {
    while (std::next_permutation(order.begin(), order.end())) {
      if (chains(out.children, order)) {
        found = true;
        break;
      }
    }
  }
  if (!found) {
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return raw_min_position(out.children[a]) < raw_min_position(out.children[b]);
    });
    found = chains(out.children, order);
  }
  if (!found) throw DataError("non-adjacent span: no sibling order for " + describe(out));

  RawNode sorted = out;
  for (std::size_t i = 0; i < k; ++i) {
    sorted.children[i] = out.children[order[i]];
    if (!out.links.empty()) sorted.links[i] = out.links[order[i]];
  }
  return sorted;
}

RawNode remove_leaf(const RawNode& raw, int position) {
  auto out = remove_leaf_impl(raw, position);
  if (!out) throw DataError("removing segment " + std::to_string(position + 1) + " empties the tree");
  return std::move(*out);
}

RawNode renumber_leaves(const RawNode& raw) {
  std::vector<int> sorted = raw_leaf_positions(raw);
  std::sort(sorted.begin(), sorted.end());
  RawNode out = raw;
  renumber_impl(out, sorted);
  return out;
}

}  // namespace rst
