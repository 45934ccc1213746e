#include "rst/core/relation.hpp"

#include "rst/error.hpp"
#include "rst/text.hpp"

namespace rst {
namespace {

constexpr std::array<std::string_view, kRelationCount> kNames{
    "Attribution", "Background",  "Cause",        "Comparison",  "Condition",
    "Contrast",    "Elaboration", "Enablement",   "Evaluation",  "Explanation",
    "Joint",       "Manner-Means", "Same-unit",   "Summary",     "Temporal",
    "Textual-organization", "Topic-Change", "Topic-Comment",
};

constexpr std::array<Relation, kRelationCount> kAll{
    Relation::Attribution, Relation::Background,  Relation::Cause,
    Relation::Comparison,  Relation::Condition,   Relation::Contrast,
    Relation::Elaboration, Relation::Enablement,  Relation::Evaluation,
    Relation::Explanation, Relation::Joint,       Relation::MannerMeans,
    Relation::SameUnit,    Relation::Summary,     Relation::Temporal,
    Relation::TextualOrganization, Relation::TopicChange, Relation::TopicComment,
};

}  // namespace

const std::array<Relation, kRelationCount>& all_relations() { return kAll; }

std::string_view to_string(Relation r) { return kNames[static_cast<std::size_t>(r)]; }

std::optional<Relation> relation_from_string(std::string_view name) {
  const std::string lowered = text::to_lower(name);
  for (std::size_t i = 0; i < kRelationCount; ++i) {
    if (text::to_lower(kNames[i]) == lowered) return kAll[i];
  }
  return std::nullopt;
}

Relation parse_relation(std::string_view name) {
  if (auto r = relation_from_string(name)) return *r;
  throw DataError("unknown relation class '" + std::string(name) + "'");
}

std::string_view to_string(Nuclearity n) {
  switch (n) {
    case Nuclearity::NN: return "NN";
    case Nuclearity::NS: return "NS";
    case Nuclearity::SN: return "SN";
    case Nuclearity::SS: return "SS";
  }
  return "??";
}

std::optional<Nuclearity> nuclearity_from_string(std::string_view s) {
  if (s == "NN") return Nuclearity::NN;
  if (s == "NS") return Nuclearity::NS;
  if (s == "SN") return Nuclearity::SN;
  if (s == "SS") return Nuclearity::SS;
  return std::nullopt;
}

std::string to_string(const Label& label) {
  std::string out(to_string(label.nuclearity));
  out += '-';
  out += to_string(label.relation);
  return out;
}

Label parse_label(std::string_view s) {
  if (s.size() < 4 || s[2] != '-') throw DataError("malformed label '" + std::string(s) + "'");
  auto nuc = nuclearity_from_string(s.substr(0, 2));
  if (!nuc) throw DataError("malformed nuclearity in label '" + std::string(s) + "'");
  return Label{*nuc, parse_relation(s.substr(3))};
}

bool label_less(const Label& a, const Label& b) { return to_string(a) < to_string(b); }

}  // namespace rst
