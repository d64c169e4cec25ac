#pragma once

#include <algorithm>
#include <string>
#include <string_view>

#include "lemcluster/detail/unicode_tables.hpp"
#include "lemcluster/utf8.hpp"

namespace lemcluster {

namespace detail {

template <typename Entry, std::size_t N>
const Entry* table_find(const Entry (&table)[N], char32_t cp) {
  const Entry* it = std::lower_bound(
      table, table + N, cp,
      [](const Entry& e, char32_t c) { return e.cp < c; });
  if (it != table + N && it->cp == cp) return it;
  return nullptr;
}

}  // namespace detail

// Full Unicode case folding (ß -> ss, İ -> i + combining dot, ...).
inline std::u32string case_fold(std::u32string_view cps) {
  std::u32string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    if (cp < 0x80) {
      out.push_back(cp >= U'A' && cp <= U'Z' ? cp + 32 : cp);
    } else if (const auto* e = detail::table_find(detail::kCaseFold, cp)) {
      out.append(e->out, e->len);
    } else {
      out.push_back(cp);
    }
  }
  return out;
}

inline std::string case_fold(std::string_view s) {
  return utf8::encode(case_fold(utf8::decode(s)));
}

// ASCII transliteration: canonical/compatibility decomposition projected to
// ASCII. Combining marks and characters with no ASCII counterpart are
// dropped, so scripts like Hangul or Kanji come out empty.
inline std::string transliterate(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (const auto* e = detail::table_find(detail::kAsciiFold, cp)) {
      out.append(detail::kAsciiFoldPool + e->offset, e->len);
    }
  }
  return out;
}

inline std::string transliterate(std::string_view s) {
  return transliterate(utf8::decode(s));
}

inline bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

// The simplified variant of a word form: case folding, ASCII
// transliteration, then deletion of non-initial vowels. Position 0 is kept
// even when it is a vowel. May be empty. Decomposition can reintroduce
// uppercase ASCII for codepoints that have no case folding (math
// alphanumerics), so the result is lowercased once more.
inline std::string simplify(std::string_view form) {
  std::string ascii = transliterate(case_fold(utf8::decode(form)));
  for (char& c : ascii) {
    if (c >= 'A' && c <= 'Z') c += 32;
  }
  std::string out;
  out.reserve(ascii.size());
  for (std::size_t i = 0; i < ascii.size(); ++i) {
    if (i > 0 && is_vowel(ascii[i])) continue;
    out.push_back(ascii[i]);
  }
  return out;
}

}  // namespace lemcluster
