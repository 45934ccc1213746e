#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "rst/core/relation.hpp"
#include "rst/error.hpp"

namespace rst {

class UnmappedRelationError : public DataError {
 public:
  explicit UnmappedRelationError(std::string name);
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

// NFC, trim, lowercase.
std::string normalize_relation_name(std::string_view name);

// Corpus relation name -> coarse class, loaded from a `name<TAB>Class` file.
//
// Lookup tries, in order: the normalized name; the name after stripping the
// suffixes -e, -s, -mn, -n one at a time; the name with hyphens, underscores
// and spaces removed ("textualorganization"); the class names themselves.
class LabelMapping {
 public:
  // The table shipped in data/relation_map.tsv, compiled in.
  static LabelMapping builtin();
  static LabelMapping from_text(std::string_view tsv);
  static LabelMapping from_file(const std::string& path);

  void add(std::string_view name, Relation cls);

  std::optional<Relation> lookup(std::string_view name) const;
  const std::map<std::string, Relation>& entries() const noexcept { return entries_; }

 private:
  std::map<std::string, Relation> entries_;
  std::map<std::string, Relation> compact_;
};

// Throws UnmappedRelationError.
Relation map_label(std::string_view name, const LabelMapping& mapping);

}  // namespace rst
