#include "doctest.h"

#include <random>
#include <sstream>
#include <vector>

#include "lemcluster/embeddings.hpp"
#include "lemcluster/errors.hpp"
#include "support/temp.hpp"

using namespace lemcluster;
using testsupport::TempDir;
using testsupport::write_file;

TEST_SUITE("embeddings") {

TEST_CASE("load_vectors truncates to the cap in file order") {
  TempDir dir;
  const auto path = dir.file("v.vec");
  write_file(path, "3 2\na 1.0 2.0\nb 3.0 4.0\nc 5.0 6.0\n");

  const Vocabulary vocab = load_vectors(path, 2);
  REQUIRE(vocab.size() == 2);
  CHECK(vocab.dim() == 2);
  CHECK(vocab[0].form == "a");
  CHECK(vocab[1].form == "b");
  CHECK(vocab[0].rank == 0);
  CHECK(vocab[1].rank == 1);
  CHECK(vocab[1].vec == std::vector<float>{3.0f, 4.0f});
  CHECK(vocab[1].norm == doctest::Approx(5.0));
  CHECK(vocab.find("a") != nullptr);
  CHECK(vocab.find("c") == nullptr);
}

TEST_CASE("load_vectors with a zero cap keeps only the header") {
  TempDir dir;
  const auto path = dir.file("v.vec");
  write_file(path, "2 3\na 1 2 3\nb 4 5 6\n");
  const Vocabulary vocab = load_vectors(path, 0);
  CHECK(vocab.size() == 0);
  CHECK(vocab.dim() == 3);
}

TEST_CASE("load_vectors reports arity errors with the line number") {
  TempDir dir;
  const auto path = dir.file("v.vec");
  write_file(path, "2 2\na 1.0 2.0\nx 1.0\n");
  try {
    load_vectors(path, 10);
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("load_vectors rejects malformed input") {
  TempDir dir;
  write_file(dir.file("empty.vec"), "");
  CHECK_THROWS_AS(load_vectors(dir.file("empty.vec"), 10), FormatError);

  write_file(dir.file("header.vec"), "banana\na 1 2\n");
  CHECK_THROWS_AS(load_vectors(dir.file("header.vec"), 10), FormatError);

  write_file(dir.file("short.vec"), "5 2\na 1 2\n");
  CHECK_THROWS_AS(load_vectors(dir.file("short.vec"), 10), FormatError);

  write_file(dir.file("badfloat.vec"), "1 2\na 1.0 oops\n");
  CHECK_THROWS_AS(load_vectors(dir.file("badfloat.vec"), 10), FormatError);

  CHECK_THROWS_AS(load_vectors(dir.file("missing.vec"), 10), IoError);
}

TEST_CASE("duplicate tokens keep the first occurrence") {
  TempDir dir;
  const auto path = dir.file("v.vec");
  write_file(path, "3 1\na 1.0\na 2.0\nb 3.0\n");
  const Vocabulary vocab = load_vectors(path, 3);
  REQUIRE(vocab.size() == 2);
  CHECK(vocab.find("a")->vec[0] == 1.0f);
  CHECK(vocab.find("b")->rank == 1);
}

TEST_CASE("load then re-serialize round-trips order and values") {
  TempDir dir;
  const auto path = dir.file("v.vec");
  write_file(path, "3 2\nword 0.125 -3.5\nother 1e-3 42\nthird 0.0001 -0.25\n");
  const Vocabulary vocab = load_vectors(path, 10);

  std::ostringstream out;
  write_vectors(vocab, out);
  write_file(dir.file("w.vec"), out.str());
  const Vocabulary again = load_vectors(dir.file("w.vec"), 10);

  REQUIRE(again.size() == vocab.size());
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    CHECK(again[i].form == vocab[i].form);
    CHECK(again[i].vec == vocab[i].vec);
  }
}

TEST_CASE("cosine identities") {
  const std::vector<float> v{1.0f, 2.0f, -3.0f};
  const std::vector<float> neg{-1.0f, -2.0f, 3.0f};
  const std::vector<float> e1{1.0f, 0.0f};
  const std::vector<float> e2{0.0f, 1.0f};
  const std::vector<float> zero{0.0f, 0.0f, 0.0f};
  CHECK(cosine(v, v) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cosine(v, neg) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(cosine(e1, e2) == 0.0);
  CHECK(cosine(v, zero) == 0.0);
  CHECK_THROWS_AS(cosine(e1, v), UsageError);
}

TEST_CASE("cosine symmetry, range and scale invariance") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<float> val(-2.0f, 2.0f);
  std::uniform_real_distribution<float> scale(0.1f, 10.0f);
  for (int i = 0; i < 2000; ++i) {
    std::vector<float> u(5), v(5), su(5);
    for (int d = 0; d < 5; ++d) {
      u[d] = val(rng);
      v[d] = val(rng);
    }
    const float a = scale(rng);
    for (int d = 0; d < 5; ++d) su[d] = a * u[d];
    const double c = cosine(u, v);
    CHECK(c == cosine(v, u));
    CHECK(std::abs(c) <= 1.0 + 1e-12);
    CHECK(cosine(su, v) == doctest::Approx(c).epsilon(1e-6));
  }
}

TEST_CASE("oov_rate counts multiplicity") {
  TempDir dir;
  const auto path = dir.file("v.vec");
  write_file(path, "2 1\na 1.0\nb 2.0\n");
  const Vocabulary vocab = load_vectors(path, 2);
  const Vocabulary empty = load_vectors(path, 0);

  const std::vector<std::string> all_in{"a", "a", "b"};
  const std::vector<std::string> mixed{"a", "b2", "b2", "c"};
  CHECK(oov_rate(vocab, all_in) == 0.0);
  CHECK(oov_rate(vocab, mixed) == doctest::Approx(0.75));
  CHECK(oov_rate(empty, all_in) == 1.0);
  CHECK(oov_rate(vocab, {}) == 0.0);
}

}  // TEST_SUITE
