#include "rst/features/features.hpp"

#include "rst/text.hpp"

namespace rst {
namespace {

constexpr std::array<std::string_view, edu_slot::kCount> kEduSymbolNames{
    "w1", "w2", "w3", "wlast", "h1", "h2", "h3", "p1", "p2", "p3", "plast",
    "len", "pos", "first", "last", "headin", "date", "num", "money", "pct"};

constexpr std::array<std::string_view, kEduSlotCount> kEduSlotNames{"S0", "S1", "Q0", "S0L",
                                                                    "S0R", "S1L", "S1R"};

std::string flag(std::string_view name, bool on) { return std::string(name) + (on ? ":1" : ":0"); }

}  // namespace

std::string_view to_string(SymbolType type) {
  switch (type) {
    case SymbolType::Word: return "word";
    case SymbolType::Pos: return "pos";
    case SymbolType::Position: return "position";
    case SymbolType::Length: return "length";
    case SymbolType::Flag: return "flag";
    case SymbolType::Label: return "label";
  }
  return "?";
}

SymbolType edu_symbol_type(int i) {
  if (i < edu_slot::kPos) return SymbolType::Word;
  if (i < edu_slot::kLength) return SymbolType::Pos;
  if (i == edu_slot::kLength) return SymbolType::Length;
  if (i == edu_slot::kPosition) return SymbolType::Position;
  return SymbolType::Flag;
}

const std::vector<SlotInfo>& template_layout() {
  static const std::vector<SlotInfo> layout = [] {
    std::vector<SlotInfo> out;
    for (auto slot : kEduSlotNames)
      for (int i = 0; i < edu_slot::kCount; ++i)
        out.push_back({std::string(slot) + "." + std::string(kEduSymbolNames[i]), edu_symbol_type(i)});
    out.push_back({"S0.label", SymbolType::Label});
    out.push_back({"S1.label", SymbolType::Label});
    return out;
  }();
  return layout;
}

std::string_view template_version() {
  return "edu7x20+label2/w50-pos16-position6-length4-flag2-label50/v1";
}

std::string default_word(const Token& token) { return text::to_lower(token.form); }

std::vector<int> head_set(const Edu& edu, const Document& doc) {
  std::vector<int> out;
  for (int t = edu.tokens.begin; t < edu.tokens.end && out.size() < 3; ++t) {
    const int h = doc.tokens.at(t).head;
    if (h == kRootHead || !edu.tokens.contains(h)) out.push_back(t);
  }
  return out;
}

std::string_view bucket_length(int l) {
  if (l > 25) return "vlong";
  if (l > 15) return "long";
  if (l > 5) return "short";
  return "vshort";
}

PositionBucket bucket_position(int index, int n) {
  PositionBucket b;
  const double s = static_cast<double>(index) / n;
  b.quarter = s < 0.25 ? "begin" : s < 0.5 ? "mid1" : s < 0.75 ? "mid2" : "end";
  b.first = index == 0;
  b.last = index == n - 1;
  return b;
}

EduSymbols edu_symbols(const Edu& edu, const Document& doc, const Lexicon& lexicon, const WordFn& word) {
  using namespace edu_slot;
  EduSymbols s;
  s.fill(std::string(kNone));

  const int b = edu.tokens.begin;
  const int e = edu.tokens.end;
  for (int i = 0; i < 3 && b + i < e; ++i) {
    s[kFirstWord + i] = word(doc.tokens.at(b + i));
    s[kPos + i] = doc.tokens.at(b + i).pos;
  }
  bool head_inside = false;
  if (e > b) {
    s[kLastWord] = word(doc.tokens.at(e - 1));
    s[kPos + 3] = doc.tokens.at(e - 1).pos;
    const auto heads = head_set(edu, doc);
    for (std::size_t i = 0; i < heads.size(); ++i) s[kHeadWord + i] = word(doc.tokens[heads[i]]);
    for (int t = b; t < e; ++t) head_inside = head_inside || doc.tokens[t].head == kRootHead;
  }

  const int length = e > b ? e - b : static_cast<int>(text::split_ws(edu.text).size());
  s[kLength] = std::string(bucket_length(length));
  const PositionBucket pos = bucket_position(edu.index, doc.edu_count());
  s[kPosition] = std::string(pos.quarter);
  s[kIsFirst] = flag("first", pos.first);
  s[kIsLast] = flag("last", pos.last);
  s[kHeadInside] = flag("headin", head_inside);
  const TextFlags f = text_flags(edu.text, lexicon);
  s[kDate] = flag("date", f.date);
  s[kNumber] = flag("num", f.number);
  s[kMoney] = flag("money", f.money);
  s[kPercent] = flag("pct", f.percent);
  return s;
}

DocumentFeatures::DocumentFeatures(const Document& doc, const Lexicon& lexicon, const WordFn& word) {
  edus_.reserve(doc.edus.size());
  for (const auto& e : doc.edus) edus_.push_back(edu_symbols(e, doc, lexicon, word));
}

ConfigSlots config_slots(const Configuration& c) {
  ConfigSlots slots;
  slots.edu.fill(-1);
  const RstNode* s0 = c.stack(0);
  const RstNode* s1 = c.stack(1);
  auto fill = [&](const RstNode* node, EduSlot self, EduSlot left, EduSlot right, int label) {
    if (!node) return;
    slots.edu[static_cast<int>(self)] = node->head();
    if (node->is_leaf()) return;
    slots.edu[static_cast<int>(left)] = node->left().head();
    slots.edu[static_cast<int>(right)] = node->right().head();
    slots.label[label] = node->label();
  };
  fill(s0, EduSlot::S0, EduSlot::S0L, EduSlot::S0R, 0);
  fill(s1, EduSlot::S1, EduSlot::S1L, EduSlot::S1R, 1);
  if (!c.queue_empty()) slots.edu[static_cast<int>(EduSlot::Q0)] = c.queue_front();
  return slots;
}

SymbolSequence config_symbols(const Configuration& c, const DocumentFeatures& features) {
  const ConfigSlots slots = config_slots(c);
  SymbolSequence seq;
  std::size_t k = 0;
  for (int slot = 0; slot < kEduSlotCount; ++slot) {
    const int edu = slots.edu[slot];
    for (int i = 0; i < edu_slot::kCount; ++i)
      seq[k++] = edu < 0 ? std::string(kNone) : features.edu(edu)[i];
  }
  for (const auto& label : slots.label) seq[k++] = label ? to_string(*label) : std::string(kNone);
  return seq;
}

}  // namespace rst
