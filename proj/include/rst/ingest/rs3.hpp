#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rst/error.hpp"
#include "rst/ingest/raw_tree.hpp"

namespace rst {

// Several units of an rs3 file remain roots after unlinked units are
// dropped; the document cannot be turned into one tree.
class MultipleRootsError : public DataError {
 public:
  explicit MultipleRootsError(std::vector<std::string> roots);
  const std::vector<std::string>& roots() const noexcept { return roots_; }

 private:
  std::vector<std::string> roots_;
};

struct Segment {
  std::string id;
  std::string text;
  bool removed = false;
  std::string removal_reason;
};

struct Rs3Document {
  // Daughter-annotated tree with Unknown roles (see derive_nuclearity).
  RawNode tree;
  RelationTypeTable relations;
  // Every <segment> in document order; leaf positions index this list.
  std::vector<Segment> segments;
  std::vector<std::string> warnings;
};

struct Rs3Options {
  // Treat the first segment (a title) as unlinked.
  bool drop_first_segment = false;
};

// Rebuilds the constituency tree from parent pointers. A unit with
// satellites becomes a constituent holding the unit itself (relation "span")
// and its satellites in document order; multinuc groups hold their nuclei.
// Unlinked units and empty segments are removed and flagged. Throws
// MultipleRootsError, or DataError on dangling parents, cycles and
// undeclared relations.
Rs3Document parse_rs3(std::string_view xml, const Rs3Options& options = {});

// Serializes a daughter-annotated tree as rs3. Internal nodes become span or
// multinuc groups; leaves become segments.
std::string write_rs3(const RawNode& root, const RelationTypeTable& relations);

}  // namespace rst
