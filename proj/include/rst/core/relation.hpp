#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace rst {

// The 18 coarse-grained relation classes shared by all harmonized corpora.
enum class Relation : std::uint8_t {
  Attribution,
  Background,
  Cause,
  Comparison,
  Condition,
  Contrast,
  Elaboration,
  Enablement,
  Evaluation,
  Explanation,
  Joint,
  MannerMeans,
  SameUnit,
  Summary,
  Temporal,
  TextualOrganization,
  TopicChange,
  TopicComment,
};

inline constexpr std::size_t kRelationCount = 18;

const std::array<Relation, kRelationCount>& all_relations();

// Canonical class name, e.g. "Manner-Means", "Same-unit".
std::string_view to_string(Relation r);

// Case-insensitive match on the canonical class name only.
std::optional<Relation> relation_from_string(std::string_view name);

// As relation_from_string but throws DataError on unknown names.
Relation parse_relation(std::string_view name);

// Nuclearity pattern of a binary node: which children are nuclei.
// SS is representable only so that malformed input can be reported.
enum class Nuclearity : std::uint8_t { NN, NS, SN, SS };

std::string_view to_string(Nuclearity n);
std::optional<Nuclearity> nuclearity_from_string(std::string_view s);

// A CDU label: nuclearity pattern plus relation class ("NS-Attribution").
struct Label {
  Nuclearity nuclearity = Nuclearity::NN;
  Relation relation = Relation::Joint;

  friend bool operator==(const Label&, const Label&) = default;
};

std::string to_string(const Label& label);

// Parses "NS-Attribution"; throws DataError.
Label parse_label(std::string_view s);

// Ordering on the printed form, used for deterministic tie-breaks.
bool label_less(const Label& a, const Label& b);

}  // namespace rst
