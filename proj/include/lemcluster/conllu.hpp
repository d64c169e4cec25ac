#pragma once

#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "lemcluster/errors.hpp"

namespace lemcluster {

struct TokenRecord {
  std::string form;
  std::string lemma;
};

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// Multiword-token ranges look like "3-4", empty nodes like "5.1".
inline bool is_skipped_id(std::string_view s) {
  for (char sep : {'-', '.'}) {
    const std::size_t pos = s.find(sep);
    if (pos != std::string_view::npos) {
      return all_digits(s.substr(0, pos)) && all_digits(s.substr(pos + 1));
    }
  }
  return false;
}

}  // namespace detail

// Reads (FORM, LEMMA) pairs from a CoNLL-U file, in corpus order and with
// multiplicity. Comment lines, blank lines, multiword-token ranges and
// empty nodes are skipped; every other line must have exactly 10 columns.
inline std::vector<TokenRecord> read_tokens(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open treebank file: " + path);

  std::vector<TokenRecord> tokens;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (line.empty() || line[0] == '#') continue;

    std::string_view rest(line);
    std::string_view cols[10];
    std::size_t n_cols = 0;
    while (true) {
      const std::size_t tab = rest.find('\t');
      const std::string_view field = rest.substr(0, tab);
      if (n_cols < 10) cols[n_cols] = field;
      ++n_cols;
      if (tab == std::string_view::npos) break;
      rest.remove_prefix(tab + 1);
    }
    if (n_cols != 10) {
      throw FormatError(path, line_no,
                        "expected 10 tab-separated columns, got " +
                            std::to_string(n_cols));
    }

    const std::string_view id = cols[0];
    if (detail::all_digits(id)) {
      if (cols[1].empty() || cols[2].empty()) {
        throw FormatError(path, line_no, "empty FORM or LEMMA column");
      }
      tokens.push_back({std::string(cols[1]), std::string(cols[2])});
    } else if (detail::is_skipped_id(id)) {
      continue;
    } else {
      throw FormatError(path, line_no,
                        "bad token id '" + std::string(id) + "'");
    }
  }
  return tokens;
}

}  // namespace lemcluster
