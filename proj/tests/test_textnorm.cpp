#include "doctest.h"

#include <random>
#include <string>

#include "lemcluster/textnorm.hpp"
#include "lemcluster/utf8.hpp"

using namespace lemcluster;

namespace {

std::string random_unicode_string(std::mt19937& rng) {
  // Codepoints drawn across scripts: ASCII, Latin diacritics, Cyrillic,
  // Greek, CJK, plus a few astral-plane characters.
  static const char32_t pool[] = {
      U'a', U'Z', U'q', U'0', U'-', U'á', U'Ä', U'č',
      U'ř', U'ß', U'ł', U'ø', U'ő', U'и',
      U'Ж', U'α', U'Ω', U'丬', U'가', U'ا',
      U'\U0001D400', U'\U0001F600'};
  std::uniform_int_distribution<std::size_t> pick(0, std::size(pool) - 1);
  std::uniform_int_distribution<int> len(0, 12);
  std::u32string cps;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) cps.push_back(pool[pick(rng)]);
  return utf8::encode(cps);
}

bool all_ascii(const std::string& s) {
  for (char c : s) {
    if (static_cast<unsigned char>(c) >= 0x80) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("textnorm") {

TEST_CASE("transliterate strips diacritics") {
  CHECK(transliterate(std::string_view("äpfel")) == "apfel");
  CHECK(transliterate(std::string_view("abc")) == "abc");
  CHECK(transliterate(std::string_view("čaj")) == "caj");
  CHECK(transliterate(std::string_view("Škoda")) == "Skoda");
  CHECK(transliterate(std::string_view("naïve")) == "naive");
}

TEST_CASE("transliterate drops undecomposable scripts") {
  CHECK(transliterate(std::string_view("東京")) == "");
  CHECK(transliterate(std::string_view("한국")) == "");
  CHECK(transliterate(std::string_view("привет")) == "");
  CHECK(transliterate(std::string_view("x東y")) == "xy");
}

TEST_CASE("transliterate folds special Latin letters") {
  CHECK(transliterate(std::string_view("łódź")) == "lodz");
  CHECK(transliterate(std::string_view("Straße")) == "Strasse");
  CHECK(transliterate(std::string_view("œuvre")) == "oeuvre");
  CHECK(transliterate(std::string_view("Ølen")) == "Olen");
}

TEST_CASE("simplify examples") {
  CHECK(simplify("Praha") == "prh");
  CHECK(simplify("Oslo") == "osl");
  CHECK(simplify("b") == "b");
  CHECK(simplify("walked") == "wlkd");
  CHECK(simplify("") == "");
  CHECK(simplify("aeiou") == "a");
}

TEST_CASE("simplify folds case before transliteration") {
  // É folds to é, which decomposes to e; the initial vowel survives.
  CHECK(simplify("École") == "ecl");
  CHECK(simplify("ÄPFEL") == "apfl");
}

TEST_CASE("simplify is idempotent and never grows") {
  std::mt19937 rng(20240811);
  for (int i = 0; i < 2000; ++i) {
    const std::string s = random_unicode_string(rng);
    const std::string once = simplify(s);
    CHECK(simplify(once) == once);
    CHECK(once.size() <= transliterate(case_fold(std::string_view(s))).size());
  }
}

TEST_CASE("simplify is the identity on lowercase consonant strings") {
  for (const char* s : {"prh", "wlk", "bcdfg", "x", "zzz"}) {
    CHECK(simplify(s) == s);
  }
}

TEST_CASE("transliterate output is always ASCII") {
  std::mt19937 rng(7);
  for (int i = 0; i < 5000; ++i) {
    const std::string s = random_unicode_string(rng);
    CHECK(all_ascii(transliterate(std::string_view(s))));
    CHECK(all_ascii(simplify(s)));
  }
}

TEST_CASE("decode skips invalid utf-8 without failing") {
  const std::string junk = "a\xFF\xC3(b\xE2\x88";
  const std::u32string cps = utf8::decode(junk);
  CHECK(utf8::encode(cps) == "a(b");
  CHECK(all_ascii(transliterate(junk)));
}

}  // TEST_SUITE
