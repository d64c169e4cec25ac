#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "lemcluster/textnorm.hpp"
#include "lemcluster/utf8.hpp"

namespace lemcluster {

struct JwParams {
  double prefix_scale = 0.1;     // weight per common-prefix character
  int max_prefix = 4;            // prefix length cap
  double boost_threshold = 0.7;  // boost only when jaro >= threshold
};

// Jaro similarity over codepoint sequences. Two empty strings compare as
// 1.0, one empty string as 0.0; both cases reach us through simplified
// variants, which may be empty.
inline double jaro(std::u32string_view a, std::u32string_view b) {
  const std::size_t la = a.size(), lb = b.size();
  if (la == 0 && lb == 0) return 1.0;
  if (la == 0 || lb == 0) return 0.0;

  const std::size_t max_len = std::max(la, lb);
  const std::size_t window = max_len / 2 > 0 ? max_len / 2 - 1 : 0;

  std::vector<bool> a_match(la, false), b_match(lb, false);
  std::size_t matches = 0;
  for (std::size_t i = 0; i < la; ++i) {
    const std::size_t lo = i > window ? i - window : 0;
    const std::size_t hi = std::min(lb, i + window + 1);
    for (std::size_t j = lo; j < hi; ++j) {
      if (!b_match[j] && a[i] == b[j]) {
        a_match[i] = true;
        b_match[j] = true;
        ++matches;
        break;
      }
    }
  }
  if (matches == 0) return 0.0;

  std::size_t half_transpositions = 0;
  std::size_t j = 0;
  for (std::size_t i = 0; i < la; ++i) {
    if (!a_match[i]) continue;
    while (!b_match[j]) ++j;
    if (a[i] != b[j]) ++half_transpositions;
    ++j;
  }
  const double m = static_cast<double>(matches);
  const double t = static_cast<double>(half_transpositions / 2);
  return (m / la + m / lb + (m - t) / m) / 3.0;
}

inline double jaro_winkler(std::u32string_view a, std::u32string_view b,
                           const JwParams& p = {}) {
  const double j = jaro(a, b);
  if (j < p.boost_threshold) return j;
  const std::size_t cap =
      std::min({a.size(), b.size(), static_cast<std::size_t>(p.max_prefix)});
  std::size_t prefix = 0;
  while (prefix < cap && a[prefix] == b[prefix]) ++prefix;
  return j + static_cast<double>(prefix) * p.prefix_scale * (1.0 - j);
}

inline double jaro(std::string_view a, std::string_view b) {
  return jaro(utf8::decode(a), utf8::decode(b));
}

inline double jaro_winkler(std::string_view a, std::string_view b,
                           const JwParams& p = {}) {
  return jaro_winkler(utf8::decode(a), utf8::decode(b), p);
}

// Average of the Jaro-Winkler of the raw pair and of the simplified pair.
inline double avg_jw(std::string_view a, std::string_view b,
                     const JwParams& p = {}) {
  const double raw = jaro_winkler(a, b, p);
  const double simple =
      jaro_winkler(utf8::decode(simplify(a)), utf8::decode(simplify(b)), p);
  return (raw + simple) / 2.0;
}

}  // namespace lemcluster
