#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "lemcluster/cluster.hpp"
#include "lemcluster/conllu.hpp"
#include "lemcluster/errors.hpp"
#include "lemcluster/hypercluster.hpp"
#include "lemcluster/utf8.hpp"

namespace lemcluster {

// One opaque label per token.
using Labeling = std::vector<std::string>;

struct VScores {
  double homogeneity = 0.0;
  double completeness = 0.0;
  double v = 0.0;
};

namespace detail {

inline std::vector<std::uint32_t> label_ids(const Labeling& labels) {
  std::vector<std::uint32_t> ids;
  ids.reserve(labels.size());
  std::unordered_map<std::string, std::uint32_t> map;
  map.reserve(labels.size());
  for (const auto& l : labels) {
    auto [it, _] = map.emplace(l, static_cast<std::uint32_t>(map.size()));
    ids.push_back(it->second);
  }
  return ids;
}

inline double entropy(std::span<const std::size_t> counts, std::size_t total) {
  double h = 0.0;
  const double n = static_cast<double>(total);
  for (std::size_t c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / n;
    h -= p * std::log(p);
  }
  return h;
}

}  // namespace detail

// Token-level homogeneity, completeness and v-measure from Shannon
// entropies of the joint label counts. The log base cancels in both ratios.
inline VScores v_measure(const Labeling& gold, const Labeling& pred) {
  if (gold.empty()) throw UsageError("v_measure: empty labelings");
  if (gold.size() != pred.size()) {
    throw UsageError("v_measure: length mismatch (" +
                     std::to_string(gold.size()) + " vs " +
                     std::to_string(pred.size()) + ")");
  }

  const auto g = detail::label_ids(gold);
  const auto k = detail::label_ids(pred);
  const std::size_t n = g.size();

  std::size_t ng = 0, nk = 0;
  for (auto id : g) ng = std::max<std::size_t>(ng, id + 1);
  for (auto id : k) nk = std::max<std::size_t>(nk, id + 1);

  std::vector<std::size_t> gold_counts(ng, 0), pred_counts(nk, 0);
  std::unordered_map<std::uint64_t, std::size_t> joint;
  joint.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ++gold_counts[g[i]];
    ++pred_counts[k[i]];
    ++joint[(static_cast<std::uint64_t>(g[i]) << 32) | k[i]];
  }
  // Summation order is pinned so results do not depend on hash layout.
  std::vector<std::pair<std::uint64_t, std::size_t>> cells(joint.begin(),
                                                           joint.end());
  std::sort(cells.begin(), cells.end());

  const double nn = static_cast<double>(n);
  double h_gold_given_pred = 0.0, h_pred_given_gold = 0.0;
  for (const auto& [key, count] : cells) {
    const auto gi = static_cast<std::uint32_t>(key >> 32);
    const auto ki = static_cast<std::uint32_t>(key & 0xFFFFFFFFu);
    const double c = static_cast<double>(count);
    h_gold_given_pred -= c / nn * std::log(c / pred_counts[ki]);
    h_pred_given_gold -= c / nn * std::log(c / gold_counts[gi]);
  }
  const double h_gold = detail::entropy(gold_counts, n);
  const double h_pred = detail::entropy(pred_counts, n);

  VScores s;
  s.homogeneity = h_gold == 0.0 ? 1.0 : 1.0 - h_gold_given_pred / h_gold;
  s.completeness = h_pred == 0.0 ? 1.0 : 1.0 - h_pred_given_gold / h_pred;
  const double hc = s.homogeneity + s.completeness;
  s.v = hc == 0.0 ? 0.0 : 2.0 * s.homogeneity * s.completeness / hc;
  return s;
}

enum class BaselineMode { form, form5 };

// Baseline: the raw form itself, or its first 5 codepoints.
inline Labeling baseline_labels(std::span<const TokenRecord> tokens,
                                BaselineMode mode) {
  Labeling labels;
  labels.reserve(tokens.size());
  for (const auto& t : tokens) {
    labels.push_back(mode == BaselineMode::form ? t.form
                                                : utf8::prefix(t.form, 5));
  }
  return labels;
}

// Oracle upper bound: the gold lemma whenever it shares the form's
// hypercluster, else the form itself. Lemma and form labels live in
// disjoint namespaces so an unrelated lemma string can never collide with
// a fallback form label.
inline Labeling oracle_labels(std::span<const TokenRecord> tokens, int K) {
  Labeling labels;
  labels.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (stem(t.lemma, K) == stem(t.form, K)) {
      labels.push_back("L\x1F" + t.lemma);
    } else {
      labels.push_back("F\x1F" + t.form);
    }
  }
  return labels;
}

// Error reduction on the scale from baseline (0%) to upper bound (100%),
// in percent. Undefined when baseline and upper bound coincide.
inline std::optional<double> error_reduction(double base, double ours,
                                             double upper) {
  if (base == upper) return std::nullopt;
  return (base - ours) / (base - upper) * 100.0;
}

struct EvalReport {
  double homogeneity = 0.0;
  double completeness = 0.0;
  double v_measure = 0.0;
  double error = 0.0;  // 1 - v_measure of our labeling

  double baseline_form_err = 0.0;
  double baseline_form5_err = 0.0;
  double baseline_err = 0.0;  // the better of the two
  BaselineMode baseline_mode = BaselineMode::form;

  double our_err = 0.0;
  double oracle_err = 0.0;
  std::optional<double> err_reduction;
};

// Token-based evaluation: every token is assigned a cluster (out-of-
// vocabulary forms via the single clustering step, on a session copy of the
// lexicon), and the resulting labeling is scored against gold lemmas
// alongside both baselines and the oracle.
inline EvalReport evaluate_run(std::span<const TokenRecord> tokens,
                               const Lexicon& lex, const Vocabulary& vocab,
                               const Params& p) {
  if (tokens.empty()) throw UsageError("evaluate_run: no tokens");

  Lexicon session = lex;
  Labeling gold, ours;
  gold.reserve(tokens.size());
  ours.reserve(tokens.size());
  for (const auto& t : tokens) {
    gold.push_back(t.lemma);
    ours.push_back(std::to_string(assign(t.form, session, vocab, p)));
  }

  EvalReport r;
  const VScores s = v_measure(gold, ours);
  r.homogeneity = s.homogeneity;
  r.completeness = s.completeness;
  r.v_measure = s.v;
  r.error = 1.0 - s.v;
  r.our_err = r.error;

  r.baseline_form_err =
      1.0 - v_measure(gold, baseline_labels(tokens, BaselineMode::form)).v;
  r.baseline_form5_err =
      1.0 - v_measure(gold, baseline_labels(tokens, BaselineMode::form5)).v;
  if (r.baseline_form_err <= r.baseline_form5_err) {
    r.baseline_err = r.baseline_form_err;
    r.baseline_mode = BaselineMode::form;
  } else {
    r.baseline_err = r.baseline_form5_err;
    r.baseline_mode = BaselineMode::form5;
  }

  r.oracle_err = 1.0 - v_measure(gold, oracle_labels(tokens, p.K)).v;
  r.err_reduction = error_reduction(r.baseline_err, r.our_err, r.oracle_err);
  return r;
}

}  // namespace lemcluster
