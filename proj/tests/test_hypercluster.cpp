#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "lemcluster/hypercluster.hpp"
#include "support/temp.hpp"

using namespace lemcluster;
using testsupport::TempDir;
using testsupport::write_file;

namespace {

Vocabulary vocab_of(const std::vector<std::string>& forms) {
  TempDir dir;
  const auto path = dir.file("v.vec");
  std::string content = std::to_string(forms.size()) + " 1\n";
  for (std::size_t i = 0; i < forms.size(); ++i) {
    content += forms[i] + " " + std::to_string(i + 1) + ".0\n";
  }
  write_file(path, content);
  return load_vectors(path, forms.size());
}

}  // namespace

TEST_SUITE("hypercluster") {

TEST_CASE("stem takes the simplified prefix") {
  CHECK(stem("Praha", 3) == "prh");
  CHECK(stem("Praze", 3) == "prz");
  CHECK(stem("ab", 3) == "ab");
  CHECK(stem("walked", 3) == "wlk");
  CHECK(stem("walk", 5) == "wlk");
  CHECK(stem("a", 3) == "a");
}

TEST_CASE("stem falls back to the lowercased raw form") {
  CHECK(stem("東京", 3) == "東京");
  CHECK(stem("서울특별시", 2) == "서울");
  CHECK(stem("ПРИВЕТ", 3) == std::string("привет").substr(0, 6));  // 3 codepoints
  CHECK(stem("", 3) == kEmptyStem);
}

TEST_CASE("partition groups by stem and preserves rank order") {
  const Vocabulary vocab =
      vocab_of({"walk", "talk", "walks", "walked", "go", "talks"});
  const HyperclusterSet set = partition(vocab, 3);

  REQUIRE(set.blocks.count("wlk") == 1);
  REQUIRE(set.blocks.count("tlk") == 1);
  REQUIRE(set.blocks.count("g") == 1);
  CHECK(set.block_count() == 3);

  const auto& wlk = set.blocks.at("wlk");
  REQUIRE(wlk.size() == 3);
  CHECK(vocab[wlk[0]].form == "walk");
  CHECK(vocab[wlk[1]].form == "walks");
  CHECK(vocab[wlk[2]].form == "walked");
}

TEST_CASE("distinct stems give singleton blocks") {
  const Vocabulary vocab = vocab_of({"a", "b"});
  const HyperclusterSet set = partition(vocab, 3);
  CHECK(set.block_count() == 2);
  for (const auto& [_, members] : set.blocks) CHECK(members.size() == 1);
}

TEST_CASE("blocks partition the vocabulary") {
  std::mt19937 rng(555);
  std::uniform_int_distribution<int> len(1, 6);
  std::uniform_int_distribution<int> ch('a', 'h');
  std::set<std::string> unique;
  while (unique.size() < 300) {
    std::string s;
    for (int i = 0, n = len(rng); i < n; ++i) {
      s.push_back(static_cast<char>(ch(rng)));
    }
    unique.insert(s);
  }
  const std::vector<std::string> forms(unique.begin(), unique.end());
  const Vocabulary vocab = vocab_of(forms);
  const HyperclusterSet set = partition(vocab, 3);

  CHECK(set.form_count() == vocab.size());
  std::set<std::uint32_t> seen;
  for (const auto& [key, members] : set.blocks) {
    for (std::uint32_t m : members) {
      CHECK(seen.insert(m).second);  // disjoint
      CHECK(stem(vocab[m].form, 3) == key);
    }
  }
  CHECK(seen.size() == vocab.size());  // exhaustive
}

TEST_CASE("partition is permutation independent up to within-block order") {
  const std::vector<std::string> forms{"walk", "walks", "talk", "go", "walked"};
  std::vector<std::string> shuffled = forms;
  std::reverse(shuffled.begin(), shuffled.end());

  const HyperclusterSet a = partition(vocab_of(forms), 3);
  const HyperclusterSet b = partition(vocab_of(shuffled), 3);

  REQUIRE(a.block_count() == b.block_count());
  auto ita = a.blocks.begin();
  auto itb = b.blocks.begin();
  for (; ita != a.blocks.end(); ++ita, ++itb) {
    CHECK(ita->first == itb->first);
    CHECK(ita->second.size() == itb->second.size());
  }
}

}  // TEST_SUITE
