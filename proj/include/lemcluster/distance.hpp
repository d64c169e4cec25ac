#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>

#include "lemcluster/embeddings.hpp"
#include "lemcluster/errors.hpp"
#include "lemcluster/strsim.hpp"
#include "lemcluster/textnorm.hpp"
#include "lemcluster/utf8.hpp"

namespace lemcluster {

enum class DistanceMode { combined, jw_only, cos_only };

inline std::string_view to_string(DistanceMode m) {
  switch (m) {
    case DistanceMode::jw_only: return "jw_only";
    case DistanceMode::cos_only: return "cos_only";
    default: return "combined";
  }
}

inline std::optional<DistanceMode> parse_distance_mode(std::string_view s) {
  if (s == "combined") return DistanceMode::combined;
  if (s == "jw_only") return DistanceMode::jw_only;
  if (s == "cos_only") return DistanceMode::cos_only;
  return std::nullopt;
}

struct Params {
  double t = 0.4;        // cluster merge threshold
  int K = 3;             // stem length (simplified-variant prefix)
  std::size_t N = 100000;  // vocabulary cap
  DistanceMode mode = DistanceMode::combined;
  JwParams jw;

  void validate() const {
    if (t < 0.0 || t > 1.0) throw UsageError("t must lie in [0,1]");
    if (K < 1) throw UsageError("K must be >= 1");
    if (jw.prefix_scale < 0.0 || jw.prefix_scale > 0.25) {
      throw UsageError("jw prefix_scale must lie in [0,0.25]");
    }
    if (jw.max_prefix < 0) throw UsageError("jw max_prefix must be >= 0");
  }
};

// A form prepared for repeated distance computations: decoded raw and
// simplified codepoints plus its vector, when it has one.
struct PreparedForm {
  std::u32string raw;
  std::u32string simplified;
  const VocabEntry* entry = nullptr;  // null for out-of-vocabulary forms
};

inline PreparedForm prepare_form(std::string_view form,
                                 const Vocabulary& vocab) {
  PreparedForm p;
  p.raw = utf8::decode(form);
  p.simplified = utf8::decode(simplify(form));
  p.entry = vocab.find(form);
  return p;
}

namespace detail {

inline double avg_jw_prepared(const PreparedForm& a, const PreparedForm& b,
                              const JwParams& p) {
  return (jaro_winkler(a.raw, b.raw, p) +
          jaro_winkler(a.simplified, b.simplified, p)) /
         2.0;
}

inline std::optional<double> cosine_prepared(const PreparedForm& a,
                                             const PreparedForm& b) {
  if (a.entry == nullptr || b.entry == nullptr) return std::nullopt;
  if (a.entry == b.entry) return 1.0;  // d(x,x) = 0 even for zero vectors
  if (a.entry->norm == 0.0 || b.entry->norm == 0.0) return 0.0;
  const auto& u = a.entry->vec;
  const auto& v = b.entry->vec;
  double dot = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += static_cast<double>(u[i]) * v[i];
  }
  const double c = dot / (a.entry->norm * b.entry->norm);
  return std::clamp(c, -1.0, 1.0);
}

}  // namespace detail

// Combines the string score J and the optional embedding cosine C into a
// distance. When a vector is missing the embedding factor degrades to 1, so
// the distance falls back to string similarity alone; in cos_only mode a
// missing vector yields 1 unless the forms are identical.
inline double combine_scores(double j, std::optional<double> c,
                             DistanceMode mode, bool same_form) {
  switch (mode) {
    case DistanceMode::jw_only:
      return 1.0 - j;
    case DistanceMode::cos_only:
      if (!c.has_value()) return same_form ? 0.0 : 1.0;
      return 1.0 - (*c + 1.0) / 2.0;
    default: {
      const double factor = c.has_value() ? (*c + 1.0) / 2.0 : 1.0;
      return 1.0 - j * factor;
    }
  }
}

inline double pair_distance(const PreparedForm& a, const PreparedForm& b,
                            const Params& p) {
  const double j = detail::avg_jw_prepared(a, b, p.jw);
  const std::optional<double> c = detail::cosine_prepared(a, b);
  return combine_scores(j, c, p.mode, a.raw == b.raw);
}

inline double pair_distance(std::string_view a, std::string_view b,
                            const Vocabulary& vocab, const Params& p) {
  return pair_distance(prepare_form(a, vocab), prepare_form(b, vocab), p);
}

}  // namespace lemcluster
