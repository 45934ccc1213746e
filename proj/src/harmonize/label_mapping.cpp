#include "rst/harmonize/label_mapping.hpp"

#include <array>

#include "embedded_data.hpp"
#include "rst/text.hpp"

namespace rst {
namespace {

constexpr std::array<std::string_view, 4> kSuffixes{"-e", "-s", "-mn", "-n"};

std::string compact(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c != '-' && c != '_' && c != ' ') out += c;
  return out;
}

std::optional<std::string> strip_one_suffix(const std::string& s) {
  for (auto suffix : kSuffixes) {
    if (s.size() > suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0)
      return s.substr(0, s.size() - suffix.size());
  }
  return std::nullopt;
}

}  // namespace

UnmappedRelationError::UnmappedRelationError(std::string name)
    : DataError("unmapped relation '" + name + "'"), name_(std::move(name)) {}

std::string normalize_relation_name(std::string_view name) {
  return text::to_lower(text::nfc(text::trim(name)));
}

LabelMapping LabelMapping::builtin() { return from_text(embedded::kRelationMap); }

LabelMapping LabelMapping::from_text(std::string_view tsv) {
  LabelMapping mapping;
  std::size_t line_no = 0;
  for (const auto& line : text::split(tsv, '\n')) {
    ++line_no;
    std::string_view l = text::trim(line);
    if (l.empty() || l.front() == '#') continue;
    auto cols = text::split(l, '\t');
    if (cols.size() != 2) throw ParseError("expected name<TAB>Class", line_no);
    auto cls = relation_from_string(text::trim(cols[1]));
    if (!cls) throw ParseError("unknown class '" + cols[1] + "'", line_no);
    mapping.add(cols[0], *cls);
  }
  return mapping;
}

LabelMapping LabelMapping::from_file(const std::string& path) {
  return from_text(text::read_file(path));
}

void LabelMapping::add(std::string_view name, Relation cls) {
  std::string key = normalize_relation_name(name);
  entries_[key] = cls;
  compact_.emplace(compact(key), cls);
}

std::optional<Relation> LabelMapping::lookup(std::string_view name) const {
  std::string key = normalize_relation_name(name);
  std::vector<std::string> candidates{key};
  for (auto stripped = strip_one_suffix(key); stripped; stripped = strip_one_suffix(*stripped))
    candidates.push_back(*stripped);

  for (const auto& c : candidates)
    if (auto it = entries_.find(c); it != entries_.end()) return it->second;
  for (const auto& c : candidates)
    if (auto it = compact_.find(compact(c)); it != compact_.end()) return it->second;
  for (const auto& c : candidates) {
    if (auto r = relation_from_string(c)) return r;
    for (Relation r : all_relations())
      if (compact(text::to_lower(to_string(r))) == compact(c)) return r;
  }
  return std::nullopt;
}

Relation map_label(std::string_view name, const LabelMapping& mapping) {
  if (auto r = mapping.lookup(name)) return *r;
  throw UnmappedRelationError(std::string(name));
}

}  // namespace rst
