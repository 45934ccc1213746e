#include "rst/ingest/rs3.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "rst/text.hpp"

namespace rst {

MultipleRootsError::MultipleRootsError(std::vector<std::string> roots)
    : DataError([&] {
        std::string msg = "several roots:";
        for (const auto& r : roots) msg += " " + r;
        return msg;
      }()),
      roots_(std::move(roots)) {}

namespace {

namespace pt = boost::property_tree;

struct Unit {
  std::string id;
  bool is_segment = false;
  std::string group_type;
  std::string parent;
  std::string relname;
  std::string text;
  int segment_index = -1;
};

class TreeBuilder {
 public:
  TreeBuilder(const std::map<std::string, Unit>& units,
              const std::map<std::string, std::vector<std::string>>& children,
              const RelationTypeTable& table)
      : units_(units), children_(children), table_(table) {}

  std::optional<RawNode> build(const std::string& id) {
    if (!visiting_.insert(id).second) throw DataError("cycle through unit " + id);
    const Unit& u = units_.at(id);

    std::vector<std::string> span_kids;
    std::vector<std::string> multi_kids;
    std::vector<std::string> satellites;
    if (auto it = children_.find(id); it != children_.end()) {
      for (const auto& cid : it->second) {
        const Unit& c = units_.at(cid);
        switch (classify(u, c)) {
          case Kind::Span: span_kids.push_back(cid); break;
          case Kind::Multi: multi_kids.push_back(cid); break;
          case Kind::Satellite: satellites.push_back(cid); break;
        }
      }
    }

    std::optional<RawNode> core;
    if (u.is_segment) {
      if (!span_kids.empty() || !multi_kids.empty())
        throw DataError("segment " + id + " has span or multinuc children");
      core = make_raw_leaf(u.segment_index, u.id, u.text);
      core->role = Role::Unknown;
    } else if (u.group_type == "multinuc") {
      if (!span_kids.empty()) throw DataError("multinuc group " + id + " has span children");
      std::vector<RawNode> nuclei;
      for (const auto& cid : multi_kids) {
        if (auto n = build(cid)) {
          n->relation = units_.at(cid).relname;
          nuclei.push_back(std::move(*n));
        }
      }
      if (nuclei.size() == 1) {
        core = std::move(nuclei.front());
      } else if (!nuclei.empty()) {
        core = internal(std::move(nuclei));
      }
    } else {
      if (!multi_kids.empty()) throw DataError("span group " + id + " has multinuc children");
      if (span_kids.size() > 1) throw DataError("span group " + id + " has several span children");
      if (span_kids.size() == 1) core = build(span_kids.front());
    }

    std::vector<RawNode> sats;
    for (const auto& cid : satellites) {
      if (auto s = build(cid)) {
        s->relation = units_.at(cid).relname;
        sats.push_back(std::move(*s));
      }
    }
    visiting_.erase(id);

    if (!core) {
      if (!sats.empty()) throw DataError("satellites attached to empty unit " + id);
      return std::nullopt;
    }
    if (sats.empty()) return core;
    core->relation = "span";
    sats.insert(sats.begin(), std::move(*core));
    return internal(std::move(sats));
  }

 private:
  enum class Kind { Span, Multi, Satellite };

  Kind classify(const Unit& parent, const Unit& child) const {
    if (child.relname == "span") return Kind::Span;
    auto it = table_.find(child.relname);
    if (it == table_.end())
      throw DataError("relation '" + child.relname + "' is not declared in the file header");
    bool parent_multinuc = !parent.is_segment && parent.group_type == "multinuc";
    if (it->second.multi && (!it->second.mono || parent_multinuc)) {
      if (!parent_multinuc)
        throw DataError("multi-nuclear relation '" + child.relname + "' on unit " + child.id +
                        " outside a multinuc group");
      return Kind::Multi;
    }
    return Kind::Satellite;
  }

  static RawNode internal(std::vector<RawNode> kids) {
    std::stable_sort(kids.begin(), kids.end(), [](const RawNode& a, const RawNode& b) {
      return raw_min_position(a) < raw_min_position(b);
    });
    RawNode node;
    node.role = Role::Unknown;
    node.children = std::move(kids);
    return node;
  }

  const std::map<std::string, Unit>& units_;
  const std::map<std::string, std::vector<std::string>>& children_;
  const RelationTypeTable& table_;
  std::set<std::string> visiting_;
};

std::string attr(const pt::ptree& node, const char* name) {
  return node.get<std::string>(std::string("<xmlattr>.") + name, "");
}

std::string relation_key(const std::string& raw) {
  return text::to_lower(text::nfc(text::trim(raw)));
}

}  // namespace

Rs3Document parse_rs3(std::string_view xml, const Rs3Options& options) {
  pt::ptree doc;
  try {
    std::istringstream in{std::string(xml)};
    pt::read_xml(in, doc);
  } catch (const pt::xml_parser_error& e) {
    throw ParseError("malformed XML: " + e.message(), e.line());
  }
  auto rst_node = doc.get_child_optional("rst");
  if (!rst_node) throw DataError("missing <rst> element");

  Rs3Document out;
  if (auto rels = rst_node->get_child_optional("header.relations")) {
    for (const auto& [tag, rel] : *rels) {
      if (tag != "rel") continue;
      std::string name = relation_key(attr(rel, "name"));
      std::string type = text::to_lower(attr(rel, "type"));
      if (name.empty()) continue;
      RelationType& entry = out.relations[name];
      if (type == "multinuc") entry.multi = true;
      else entry.mono = true;
    }
  }

  auto body = rst_node->get_child_optional("body");
  if (!body) throw DataError("missing <body> element");

  std::map<std::string, Unit> units;
  std::vector<std::string> order;
  for (const auto& [tag, el] : *body) {
    if (tag != "segment" && tag != "group") continue;
    Unit u;
    u.id = attr(el, "id");
    if (u.id.empty()) throw DataError("<" + tag + "> without id");
    if (units.count(u.id)) throw DataError("duplicate unit id " + u.id);
    u.is_segment = tag == "segment";
    u.group_type = text::to_lower(attr(el, "type"));
    u.parent = std::string(text::trim(attr(el, "parent")));
    u.relname = relation_key(attr(el, "relname"));
    if (u.is_segment) {
      u.text = text::nfc(text::trim(el.data()));
      u.segment_index = static_cast<int>(out.segments.size());
      out.segments.push_back(Segment{u.id, u.text, false, {}});
    }
    order.push_back(u.id);
    units.emplace(u.id, std::move(u));
  }
  if (out.segments.empty()) throw DataError("no segments");

  auto remove_unit = [&](const std::string& id, const std::string& reason) {
    Unit& u = units.at(id);
    if (u.is_segment) {
      Segment& s = out.segments[static_cast<std::size_t>(u.segment_index)];
      s.removed = true;
      s.removal_reason = reason;
      out.warnings.push_back("segment " + id + " removed: " + reason);
    }
    units.erase(id);
  };

  std::set<std::string> removed;
  if (options.drop_first_segment) {
    removed.insert(out.segments.front().id);
    remove_unit(out.segments.front().id, "title");
  }
  for (const auto& s : out.segments) {
    if (!s.removed && s.text.empty()) {
      removed.insert(s.id);
      remove_unit(s.id, "empty segment");
    }
  }

  // Parent links to removed units are cut; links to unknown ids are errors.
  for (auto& [id, u] : units) {
    if (u.parent.empty()) continue;
    if (removed.count(u.parent)) {
      out.warnings.push_back("unit " + id + " was attached to removed unit " + u.parent);
      u.parent.clear();
      continue;
    }
    if (!units.count(u.parent)) throw DataError("unit " + id + " has dangling parent " + u.parent);
  }

  std::map<std::string, std::vector<std::string>> children;
  for (const auto& id : order) {
    auto it = units.find(id);
    if (it != units.end() && !it->second.parent.empty()) children[it->second.parent].push_back(id);
  }

  std::vector<std::string> linked_roots;
  std::vector<std::string> unlinked_roots;
  for (const auto& id : order) {
    auto it = units.find(id);
    if (it == units.end() || !it->second.parent.empty()) continue;
    (children.count(id) ? linked_roots : unlinked_roots).push_back(id);
  }

  std::string root_id;
  if (linked_roots.size() > 1) throw MultipleRootsError(linked_roots);
  if (linked_roots.size() == 1) {
    root_id = linked_roots.front();
    for (const auto& id : unlinked_roots) remove_unit(id, "not linked to the tree");
  } else {
    std::vector<std::string> segment_roots;
    for (const auto& id : unlinked_roots)
      if (units.at(id).is_segment) segment_roots.push_back(id);
    if (segment_roots.size() != 1) throw MultipleRootsError(unlinked_roots);
    root_id = segment_roots.front();
  }

  TreeBuilder builder(units, children, out.relations);
  auto tree = builder.build(root_id);
  if (!tree) throw DataError("document tree is empty");
  tree->role = Role::Root;
  tree->relation.clear();
  out.tree = std::move(*tree);

  std::vector<bool> in_tree(out.segments.size(), false);
  for (int p : raw_leaf_positions(out.tree)) in_tree[static_cast<std::size_t>(p)] = true;
  for (std::size_t i = 0; i < out.segments.size(); ++i) {
    Segment& s = out.segments[i];
    if (!in_tree[i] && !s.removed) {
      s.removed = true;
      s.removal_reason = "not reachable from the root";
      out.warnings.push_back("segment " + s.id + " removed: " + s.removal_reason);
    }
  }
  return out;
}

namespace {

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

class Rs3Writer {
 public:
  Rs3Writer(int n_segments, std::vector<std::string>& segments, std::vector<std::string>& groups)
      : next_group_(n_segments + 1), segments_(segments), groups_(groups) {}

  int emit(const RawNode& node, int parent, const std::string& relname) {
    if (node.is_leaf()) {
      int id = node.position + 1;
      segments_[static_cast<std::size_t>(node.position)] =
          "    <segment id=\"" + std::to_string(id) + "\"" + link(parent, relname) + ">" +
          xml_escape(node.text) + "</segment>\n";
      return id;
    }
    int id = next_group_++;
    std::size_t slot = groups_.size();
    groups_.emplace_back();
    std::vector<const RawNode*> spans;
    for (const auto& c : node.children)
      if (c.relation == "span") spans.push_back(&c);
    std::string type;
    if (spans.empty()) {
      type = "multinuc";
      for (const auto& c : node.children) emit(c, id, c.relation);
    } else {
      if (spans.size() != 1) throw DataError("rs3 writer: node with several span children");
      type = "span";
      int nucleus = emit(*spans.front(), id, "span");
      for (const auto& c : node.children)
        if (&c != spans.front()) emit(c, nucleus, c.relation);
    }
    groups_[slot] = "    <group id=\"" + std::to_string(id) + "\" type=\"" + type + "\"" +
                    link(parent, relname) + "/>\n";
    return id;
  }

 private:
  static std::string link(int parent, const std::string& relname) {
    if (parent <= 0) return {};
    return " parent=\"" + std::to_string(parent) + "\" relname=\"" + xml_escape(relname) + "\"";
  }

  int next_group_;
  std::vector<std::string>& segments_;
  std::vector<std::string>& groups_;
};

}  // namespace

std::string write_rs3(const RawNode& root, const RelationTypeTable& relations) {
  const auto leaves = raw_leaves(root);
  std::vector<std::string> segments(leaves.size());
  std::vector<std::string> groups;
  Rs3Writer writer(static_cast<int>(leaves.size()), segments, groups);
  writer.emit(root, 0, {});

  std::string out = "<rst>\n  <header>\n    <relations>\n";
  for (const auto& [name, type] : relations) {
    if (type.mono) out += "      <rel name=\"" + xml_escape(name) + "\" type=\"rst\"/>\n";
    if (type.multi) out += "      <rel name=\"" + xml_escape(name) + "\" type=\"multinuc\"/>\n";
  }
  out += "    </relations>\n  </header>\n  <body>\n";
  for (const auto& s : segments) out += s;
  for (const auto& g : groups) out += g;
  out += "  </body>\n</rst>\n";
  return out;
}

}  // namespace rst
