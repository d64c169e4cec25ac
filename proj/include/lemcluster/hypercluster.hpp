#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lemcluster/embeddings.hpp"
#include "lemcluster/textnorm.hpp"
#include "lemcluster/utf8.hpp"

namespace lemcluster {

// Reserved stem for forms that are empty even in raw lowercased form.
inline constexpr std::string_view kEmptyStem = "\xE2\x88\x85";  // U+2205

// The stem of a form: the first K characters of its simplified variant.
// Forms that transliterate to nothing (Hangul, Kanji, Arabic, ...) fall back
// to the first K codepoints of the case-folded raw form, and finally to the
// reserved empty stem.
inline std::string stem(std::string_view form, int K) {
  std::string s = simplify(form);
  if (!s.empty()) {
    if (s.size() > static_cast<std::size_t>(K)) {
      s.resize(static_cast<std::size_t>(K));
    }
    return s;
  }
  std::u32string folded = case_fold(utf8::decode(form));
  if (folded.size() > static_cast<std::size_t>(K)) {
    folded.resize(static_cast<std::size_t>(K));
  }
  if (!folded.empty()) return utf8::encode(folded);
  return std::string(kEmptyStem);
}

// Partition of the vocabulary into stem-keyed blocks. Keys are sorted, and
// block members keep vocabulary (frequency-rank) order, so iteration order
// is deterministic.
struct HyperclusterSet {
  std::map<std::string, std::vector<std::uint32_t>> blocks;

  std::size_t block_count() const { return blocks.size(); }

  std::size_t form_count() const {
    std::size_t n = 0;
    for (const auto& [_, members] : blocks) n += members.size();
    return n;
  }
};

inline HyperclusterSet partition(const Vocabulary& vocab, int K) {
  HyperclusterSet set;
  for (std::uint32_t i = 0; i < vocab.size(); ++i) {
    set.blocks[stem(vocab[i].form, K)].push_back(i);
  }
  return set;
}

}  // namespace lemcluster
