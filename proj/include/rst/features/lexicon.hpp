#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace rst {

// Per-language cue lists behind the date, money and percent indicators.
// File format: `key = item, item, ...` lines with keys percent_words,
// currency_symbols, currency_words and months; '#' starts a comment.
struct Lexicon {
  std::vector<std::string> percent_words;
  std::vector<std::string> currency_symbols;
  std::vector<std::string> currency_words;
  std::vector<std::string> months;

  static Lexicon from_text(std::string_view text);
  static Lexicon from_file(const std::string& path);
  // Shipped list for en, es, pt, de, nl or eu; the union of all of them
  // for any other code.
  static Lexicon builtin(std::string_view language);
};

struct TextFlags {
  bool date = false;
  bool number = false;
  bool money = false;
  bool percent = false;
};

// number: a digit sequence. percent: '%' or a percent word next to a number.
// money: a currency symbol or word next to a number. date: a month name, or
// d{1,2}[./-]d{1,2}[./-]d{2,4}. Case-insensitive, on raw text.
TextFlags text_flags(std::string_view text, const Lexicon& lexicon);

}  // namespace rst
