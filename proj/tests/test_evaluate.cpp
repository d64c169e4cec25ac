#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "lemcluster/evaluate.hpp"
#include "support/oracles.hpp"
#include "support/temp.hpp"

using namespace lemcluster;
using testsupport::TempDir;
using testsupport::write_file;

namespace {

Labeling to_labels(const std::vector<int>& ids) {
  Labeling out;
  for (int id : ids) out.push_back("c" + std::to_string(id));
  return out;
}

std::vector<TokenRecord> records(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<TokenRecord> out;
  for (const auto& [form, lemma] : pairs) out.push_back({form, lemma});
  return out;
}

Vocabulary micro_vocab() {
  TempDir dir;
  const auto path = dir.file("v.vec");
  write_file(path,
             "8 4\n"
             "walk 0.98 0.05 0.01 0.02\n"
             "walks 0.97 0.08 0.02 0.01\n"
             "walked 0.99 0.03 0.03 0.02\n"
             "carry 0.04 0.97 0.02 0.03\n"
             "carries 0.06 0.98 0.01 0.01\n"
             "carried 0.03 0.96 0.04 0.02\n"
             "go 0.02 0.03 0.99 0.04\n"
             "went 0.05 0.02 0.97 0.03\n");
  return load_vectors(path, 100);
}

}  // namespace

TEST_SUITE("evaluate") {

TEST_CASE("perfect prediction up to relabeling scores (1,1,1)") {
  const Labeling gold{"cat", "cat", "dog", "bird"};
  const Labeling pred{"7", "7", "3", "9"};
  const VScores s = v_measure(gold, pred);
  CHECK(s.homogeneity == 1.0);
  CHECK(s.completeness == 1.0);
  CHECK(s.v == 1.0);
}

TEST_CASE("one big cluster has zero homogeneity, full completeness") {
  const Labeling gold{"A", "A", "B", "B"};
  const Labeling pred{"x", "x", "x", "x"};
  const VScores s = v_measure(gold, pred);
  CHECK(s.homogeneity == 0.0);
  CHECK(s.completeness == 1.0);
  CHECK(s.v == 0.0);
}

TEST_CASE("4-token worked example") {
  // gold AABB vs pred 1112: H(gold|pred) = (3/4)H(1/3) so h = 0.311278;
  // H(pred|gold) = 0.5 bit over H(pred) = 0.811278 bits gives c = 0.383689
  // and v = 0.343711. The brute-force oracle below reproduces all three.
  const Labeling gold{"A", "A", "B", "B"};
  const Labeling pred{"1", "1", "1", "2"};
  const VScores s = v_measure(gold, pred);
  CHECK(s.homogeneity == doctest::Approx(0.311278).epsilon(1e-4));
  CHECK(s.completeness == doctest::Approx(0.383689).epsilon(1e-4));
  CHECK(s.v == doctest::Approx(0.343711).epsilon(1e-4));

  const auto ref = oracles::brute_vmeasure({0, 0, 1, 1}, {0, 0, 0, 1});
  CHECK(s.homogeneity == doctest::Approx(ref.h).epsilon(1e-12));
  CHECK(s.completeness == doctest::Approx(ref.c).epsilon(1e-12));
  CHECK(s.v == doctest::Approx(ref.v).epsilon(1e-12));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(v_measure({}, {}), UsageError);
  CHECK_THROWS_AS(v_measure({"a"}, {"a", "b"}), UsageError);
}

TEST_CASE("matches the brute-force oracle on random labelings") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> n_dist(1, 12);
  for (int round = 0; round < 1000; ++round) {
    const int n = n_dist(rng);
    std::uniform_int_distribution<int> label(0, std::max(1, n / 2));
    std::vector<int> gold(n), pred(n);
    for (int i = 0; i < n; ++i) {
      gold[i] = label(rng);
      pred[i] = label(rng);
    }
    const VScores s = v_measure(to_labels(gold), to_labels(pred));
    const auto ref = oracles::brute_vmeasure(gold, pred);
    CHECK(s.homogeneity == doctest::Approx(ref.h).epsilon(1e-9));
    CHECK(s.completeness == doctest::Approx(ref.c).epsilon(1e-9));
    CHECK(s.v == doctest::Approx(ref.v).epsilon(1e-9));
  }
}

TEST_CASE("swapping gold and pred swaps h and c, keeps v") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> label(0, 3);
  for (int round = 0; round < 300; ++round) {
    std::vector<int> a(8), b(8);
    for (int i = 0; i < 8; ++i) {
      a[i] = label(rng);
      b[i] = label(rng);
    }
    const VScores fwd = v_measure(to_labels(a), to_labels(b));
    const VScores rev = v_measure(to_labels(b), to_labels(a));
    CHECK(fwd.homogeneity == doctest::Approx(rev.completeness).epsilon(1e-12));
    CHECK(fwd.completeness == doctest::Approx(rev.homogeneity).epsilon(1e-12));
    CHECK(fwd.v == doctest::Approx(rev.v).epsilon(1e-12));
  }
}

TEST_CASE("invariant under relabeling either side") {
  const Labeling gold{"A", "A", "B", "C", "C"};
  const Labeling pred{"1", "2", "2", "3", "3"};
  const Labeling gold2{"zebra", "zebra", "yak", "xerus", "xerus"};
  const Labeling pred2{"one", "two", "two", "three", "three"};
  const VScores s1 = v_measure(gold, pred);
  const VScores s2 = v_measure(gold2, pred2);
  CHECK(s1.v == doctest::Approx(s2.v).epsilon(1e-12));
  CHECK(s1.homogeneity == doctest::Approx(s2.homogeneity).epsilon(1e-12));
}

TEST_CASE("baseline labels") {
  const auto tokens = records({{"walking", "walk"}, {"go", "go"},
                               {"привет", "привет"}});
  const Labeling form = baseline_labels(tokens, BaselineMode::form);
  CHECK(form[0] == "walking");
  CHECK(form[1] == "go");
  const Labeling form5 = baseline_labels(tokens, BaselineMode::form5);
  CHECK(form5[0] == "walki");
  CHECK(form5[1] == "go");
  // First five codepoints, not bytes.
  CHECK(form5[2] == std::string("приве"));
}

TEST_CASE("oracle labels follow stem agreement") {
  const auto tokens = records({{"walked", "walk"}, {"went", "go"},
                               {"go", "go"}});
  const Labeling oracle = oracle_labels(tokens, 3);
  CHECK(oracle[0] == "L\x1F" "walk");   // stem(walked) == stem(walk) == wlk
  CHECK(oracle[1] == "F\x1F" "went");   // wnt != g
  CHECK(oracle[2] == "L\x1F" "go");     // form == lemma
  // A form string can never collide with a lemma label.
  CHECK(oracle[1] != "L\x1F" "went");
}

TEST_CASE("oracle lemma labels are perfectly homogeneous") {
  // A homonym ("left") and a stem-split pair keep the fallback namespace
  // busy; every token labeled with a lemma must carry exactly that lemma.
  const auto tokens = records({{"left", "leave"}, {"left", "left"},
                               {"walked", "walk"}, {"walking", "walk"},
                               {"went", "go"}, {"go", "go"}});
  const Labeling oracle = oracle_labels(tokens, 3);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (oracle[i].rfind("L\x1F", 0) == 0) {
      CHECK(oracle[i].substr(2) == tokens[i].lemma);
    }
  }
}

TEST_CASE("error reduction") {
  CHECK(*error_reduction(4.19, 3.90, 2.93) == doctest::Approx(23.0).epsilon(5e-3));
  CHECK(*error_reduction(4.18, 3.58, 2.83) == doctest::Approx(44.4).epsilon(5e-3));
  CHECK(*error_reduction(3.0, 3.0, 1.0) == 0.0);
  CHECK(*error_reduction(3.60, 4.07, 2.37) < 0.0);  // worse than baseline
  CHECK(!error_reduction(2.0, 1.5, 2.0).has_value());
}

TEST_CASE("evaluate_run on the micro corpus") {
  const Vocabulary vocab = micro_vocab();
  Params p;
  const Lexicon lex = build_model(vocab, p);
  const auto tokens = records({{"walk", "walk"}, {"walks", "walk"},
                               {"walked", "walk"}, {"carry", "carry"},
                               {"carries", "carry"}, {"carried", "carry"},
                               {"go", "go"}, {"went", "go"},
                               {"walked", "walk"}});

  const EvalReport r = evaluate_run(tokens, lex, vocab, p);

  // Our clustering and the oracle agree on this corpus: both split only
  // "went" away from its lemma.
  CHECK(r.our_err == doctest::Approx(r.oracle_err).epsilon(1e-12));
  CHECK(r.oracle_err > 0.0);
  CHECK(r.homogeneity == 1.0);
  CHECK(r.completeness < 1.0);
  CHECK(r.baseline_err == std::min(r.baseline_form_err, r.baseline_form5_err));
  CHECK(r.baseline_err > r.our_err);
  REQUIRE(r.err_reduction.has_value());
  CHECK(*r.err_reduction == doctest::Approx(100.0).epsilon(1e-9));
}

TEST_CASE("a singleton-per-form lexicon scores like the form baseline") {
  const Vocabulary vocab = micro_vocab();
  Params p;
  p.t = 0.0;  // build-time singletons
  const Lexicon lex = build_model(vocab, p);
  const auto tokens = records({{"walk", "walk"}, {"walks", "walk"},
                               {"carry", "carry"}, {"carried", "carry"},
                               {"go", "go"}, {"went", "go"},
                               {"walk", "walk"}});
  const EvalReport r = evaluate_run(tokens, lex, vocab, p);
  CHECK(r.our_err == doctest::Approx(r.baseline_form_err).epsilon(1e-12));
}

TEST_CASE("evaluate_run does not mutate the lexicon") {
  const Vocabulary vocab = micro_vocab();
  Params p;
  const Lexicon lex = build_model(vocab, p);
  const std::size_t clusters_before = lex.cluster_count();
  const auto tokens = records({{"zzz", "zzz"}, {"walk", "walk"}});
  (void)evaluate_run(tokens, lex, vocab, p);
  CHECK(lex.cluster_count() == clusters_before);
}

}  // TEST_SUITE
