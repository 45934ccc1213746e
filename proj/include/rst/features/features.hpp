#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rst/core/document.hpp"
#include "rst/features/lexicon.hpp"
#include "rst/transition/transition.hpp"

namespace rst {

enum class SymbolType : std::uint8_t { Word, Pos, Position, Length, Flag, Label };
inline constexpr std::size_t kSymbolTypeCount = 6;
std::string_view to_string(SymbolType type);

// Fills every slot with nothing to describe (empty stack, short EDU).
inline constexpr std::string_view kNone = "<NONE>";

// Layout of the 20 symbols describing one EDU.
namespace edu_slot {
inline constexpr int kFirstWord = 0;  // 3 slots
inline constexpr int kLastWord = 3;
inline constexpr int kHeadWord = 4;  // 3 slots
inline constexpr int kPos = 7;       // first 3 words, then last word
inline constexpr int kLength = 11;
inline constexpr int kPosition = 12;
inline constexpr int kIsFirst = 13;
inline constexpr int kIsLast = 14;
inline constexpr int kHeadInside = 15;
inline constexpr int kDate = 16;
inline constexpr int kNumber = 17;
inline constexpr int kMoney = 18;
inline constexpr int kPercent = 19;
inline constexpr int kCount = 20;
}  // namespace edu_slot

inline constexpr int kWordsPerEdu = 7;

// EDU slots of a configuration: S0, S1, Q0, then the heads of the left and
// right children of S0 and S1.
enum class EduSlot : std::uint8_t { S0, S1, Q0, S0L, S0R, S1L, S1R };
inline constexpr int kEduSlotCount = 7;
inline constexpr int kLabelSlotCount = 2;  // S0, S1
inline constexpr int kSequenceLength = kEduSlotCount * edu_slot::kCount + kLabelSlotCount;

struct SlotInfo {
  std::string name;  // "S0.w1", "Q0.pos2", "S1.label"
  SymbolType type;
};

// The fixed layout of a SymbolSequence, kSequenceLength entries.
const std::vector<SlotInfo>& template_layout();
SymbolType edu_symbol_type(int index);

// Identifies the layout and embedding widths; stored in model files.
std::string_view template_version();

using EduSymbols = std::array<std::string, edu_slot::kCount>;
using SymbolSequence = std::array<std::string, kSequenceLength>;

// Maps a token to its word symbol. The default lowercases the form.
using WordFn = std::function<std::string(const Token&)>;
std::string default_word(const Token& token);

// Tokens of the EDU governed from outside it (or by the root), in document
// order, at most three.
std::vector<int> head_set(const Edu& edu, const Document& doc);

// "vlong" (> 25), "long" (> 15), "short" (> 5), "vshort".
std::string_view bucket_length(int tokens);

struct PositionBucket {
  std::string_view quarter;  // "begin", "mid1", "mid2", "end"
  bool first = false;
  bool last = false;
};
PositionBucket bucket_position(int index, int n);

EduSymbols edu_symbols(const Edu& edu, const Document& doc, const Lexicon& lexicon,
                       const WordFn& word = default_word);

// Per-document cache of edu_symbols.
class DocumentFeatures {
 public:
  DocumentFeatures(const Document& doc, const Lexicon& lexicon, const WordFn& word = default_word);
  int edu_count() const noexcept { return static_cast<int>(edus_.size()); }
  const EduSymbols& edu(int i) const { return edus_.at(i); }

 private:
  std::vector<EduSymbols> edus_;
};

// Which EDUs and CDU labels fill the slots of a configuration.
struct ConfigSlots {
  std::array<int, kEduSlotCount> edu{};  // -1 when absent
  std::array<std::optional<Label>, kLabelSlotCount> label{};
};
ConfigSlots config_slots(const Configuration& c);

SymbolSequence config_symbols(const Configuration& c, const DocumentFeatures& features);

}  // namespace rst
