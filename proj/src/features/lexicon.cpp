#include "rst/features/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

#include "embedded_data.hpp"
#include "rst/error.hpp"
#include "rst/text.hpp"

namespace rst {
namespace {

bool word_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  return u >= 0x80 || std::isalnum(u) != 0;
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// True if a digit sits next to [begin, end) in `s`, ignoring spaces.
bool next_to_number(std::string_view s, std::size_t begin, std::size_t end) {
  std::size_t i = end;
  while (i < s.size() && s[i] == ' ') ++i;
  if (i < s.size() && is_digit(s[i])) return true;
  std::size_t j = begin;
  while (j > 0 && s[j - 1] == ' ') --j;
  return j > 0 && is_digit(s[j - 1]);
}

// Calls `fn(begin, end)` for each occurrence of `needle`, requiring word
// boundaries on the sides where the needle itself starts or ends with a
// word character.
template <typename Fn>
bool any_occurrence(std::string_view hay, std::string_view needle, Fn fn) {
  if (needle.empty()) return false;
  for (std::size_t pos = hay.find(needle); pos != std::string_view::npos; pos = hay.find(needle, pos + 1)) {
    const std::size_t end = pos + needle.size();
    if (word_char(needle.front()) && pos > 0 && word_char(hay[pos - 1])) continue;
    if (word_char(needle.back()) && end < hay.size() && word_char(hay[end])) continue;
    if (fn(pos, end)) return true;
  }
  return false;
}

std::vector<std::string> parse_list(std::string_view value) {
  std::vector<std::string> out;
  for (const auto& item : text::split(value, ',')) {
    std::string v = text::to_lower(text::nfc(text::trim(item)));
    if (!v.empty()) out.push_back(std::move(v));
  }
  return out;
}

void append(std::vector<std::string>& to, const std::vector<std::string>& from) {
  for (const auto& s : from)
    if (std::find(to.begin(), to.end(), s) == to.end()) to.push_back(s);
}

}  // namespace

Lexicon Lexicon::from_text(std::string_view content) {
  Lexicon lex;
  std::size_t line_no = 0;
  for (const auto& line : text::split(content, '\n')) {
    ++line_no;
    std::string_view l = text::trim(line);
    if (l.empty() || l.front() == '#') continue;
    const auto eq = l.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key = values", line_no);
    const std::string_view key = text::trim(l.substr(0, eq));
    auto values = parse_list(l.substr(eq + 1));
    if (key == "percent_words") lex.percent_words = std::move(values);
    else if (key == "currency_symbols") lex.currency_symbols = std::move(values);
    else if (key == "currency_words") lex.currency_words = std::move(values);
    else if (key == "months") lex.months = std::move(values);
    else throw ParseError("unknown key '" + std::string(key) + "'", line_no);
  }
  return lex;
}

Lexicon Lexicon::from_file(const std::string& path) { return from_text(text::read_file(path)); }

Lexicon Lexicon::builtin(std::string_view language) {
  const std::string lang = text::to_lower(language);
  if (lang == "en") return from_text(embedded::kLexiconEn);
  if (lang == "es") return from_text(embedded::kLexiconEs);
  if (lang == "pt") return from_text(embedded::kLexiconPt);
  if (lang == "de") return from_text(embedded::kLexiconDe);
  if (lang == "nl") return from_text(embedded::kLexiconNl);
  if (lang == "eu") return from_text(embedded::kLexiconEu);
  Lexicon all;
  for (auto code : {"en", "es", "pt", "de", "nl", "eu"}) {
    Lexicon l = builtin(code);
    append(all.percent_words, l.percent_words);
    append(all.currency_symbols, l.currency_symbols);
    append(all.currency_words, l.currency_words);
    append(all.months, l.months);
  }
  return all;
}

TextFlags text_flags(std::string_view raw, const Lexicon& lexicon) {
  static const std::regex kDate(R"((^|[^0-9])[0-9]{1,2}[./-][0-9]{1,2}[./-][0-9]{2,4}([^0-9]|$))");
  const std::string s = text::to_lower(text::nfc(raw));
  TextFlags f;
  f.number = std::any_of(s.begin(), s.end(), is_digit);
  if (!f.number) {
    for (const auto& m : lexicon.months)
      if (any_occurrence(s, m, [](std::size_t, std::size_t) { return true; })) f.date = true;
    return f;
  }
  auto near_number = [&](std::size_t b, std::size_t e) { return next_to_number(s, b, e); };
  f.percent = any_occurrence(s, "%", near_number);
  for (const auto& w : lexicon.percent_words) f.percent = f.percent || any_occurrence(s, w, near_number);
  for (const auto& w : lexicon.currency_symbols) f.money = f.money || any_occurrence(s, w, near_number);
  for (const auto& w : lexicon.currency_words) f.money = f.money || any_occurrence(s, w, near_number);
  f.date = std::regex_search(s, kDate);
  for (const auto& m : lexicon.months)
    f.date = f.date || any_occurrence(s, m, [](std::size_t, std::size_t) { return true; });
  return f;
}

}  // namespace rst
