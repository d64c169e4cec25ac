#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lemcluster/errors.hpp"

namespace lemcluster {

struct VocabEntry {
  std::string form;
  std::vector<float> vec;
  std::uint32_t rank = 0;  // position in the source file = frequency rank
  double norm = 0.0;
};

// The word forms that have vectors, in source (frequency) order. Immutable
// after load; lookups are safe from any number of threads.
class Vocabulary {
 public:
  Vocabulary() = default;
  Vocabulary(std::vector<VocabEntry> entries, std::size_t dim)
      : entries_(std::move(entries)), dim_(dim) {
    index_.reserve(entries_.size());
    for (std::uint32_t i = 0; i < entries_.size(); ++i) {
      entries_[i].rank = i;
      entries_[i].norm = compute_norm(entries_[i].vec);
      index_.emplace(entries_[i].form, i);
    }
  }

  std::size_t size() const { return entries_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<VocabEntry>& entries() const { return entries_; }
  const VocabEntry& operator[](std::size_t i) const { return entries_[i]; }

  const VocabEntry* find(std::string_view form) const {
    auto it = index_.find(std::string(form));
    return it == index_.end() ? nullptr : &entries_[it->second];
  }

  bool contains(std::string_view form) const { return find(form) != nullptr; }

 private:
  static double compute_norm(const std::vector<float>& v) {
    double s = 0.0;
    for (float x : v) s += static_cast<double>(x) * x;
    return std::sqrt(s);
  }

  std::vector<VocabEntry> entries_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::size_t dim_ = 0;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

inline bool parse_size(std::string_view s, std::size_t& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

inline bool parse_float(std::string_view s, float& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

inline void chomp(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace detail

// Reads the textual vector format: a "<count> <dim>" header line followed by
// "<token> <dim floats>" rows. Returns the first min(n_max, count) rows;
// duplicate tokens keep the first occurrence.
inline Vocabulary load_vectors(const std::string& path, std::size_t n_max) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open vector file: " + path);

  std::string line;
  if (!std::getline(in, line)) {
    throw FormatError(path, 1, "empty vector file");
  }
  detail::chomp(line);
  auto header = detail::split_ws(line);
  std::size_t count = 0, dim = 0;
  if (header.size() != 2 || !detail::parse_size(header[0], count) ||
      !detail::parse_size(header[1], dim) || dim == 0) {
    throw FormatError(path, 1, "malformed header, expected '<count> <dim>'");
  }

  const std::size_t want = std::min(n_max, count);
  std::vector<VocabEntry> entries;
  entries.reserve(want);
  std::unordered_map<std::string, std::uint32_t> seen;
  seen.reserve(want);

  for (std::size_t row = 0; row < want; ++row) {
    const std::size_t line_no = row + 2;
    if (!std::getline(in, line)) {
      throw FormatError(path, line_no, "unexpected end of file, header promised " +
                                           std::to_string(count) + " rows");
    }
    detail::chomp(line);
    auto fields = detail::split_ws(line);
    if (fields.size() != dim + 1) {
      throw FormatError(path, line_no,
                        "expected token + " + std::to_string(dim) +
                            " values, got " + std::to_string(fields.size()) +
                            " fields");
    }
    std::string form(fields[0]);
    if (seen.count(form)) continue;
    VocabEntry e;
    e.form = std::move(form);
    e.vec.resize(dim);
    for (std::size_t d = 0; d < dim; ++d) {
      if (!detail::parse_float(fields[d + 1], e.vec[d])) {
        throw FormatError(path, line_no, "bad float value '" +
                                             std::string(fields[d + 1]) + "'");
      }
    }
    seen.emplace(e.form, 0);
    entries.push_back(std::move(e));
  }
  return Vocabulary(std::move(entries), dim);
}

// Writes the same textual format back; float values use the shortest
// round-trip representation.
inline void write_vectors(const Vocabulary& vocab, std::ostream& out) {
  out << vocab.size() << ' ' << vocab.dim() << '\n';
  char buf[64];
  for (const auto& e : vocab.entries()) {
    out << e.form;
    for (float x : e.vec) {
      auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
      out << ' ';
      out.write(buf, p - buf);
    }
    out << '\n';
  }
}

// Cosine similarity; zero-norm vectors compare as 0.
inline double cosine(std::span<const float> u, std::span<const float> v) {
  if (u.size() != v.size()) {
    throw UsageError("cosine: dimension mismatch (" +
                     std::to_string(u.size()) + " vs " +
                     std::to_string(v.size()) + ")");
  }
  double dot = 0.0, nu = 0.0, nv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += static_cast<double>(u[i]) * v[i];
    nu += static_cast<double>(u[i]) * u[i];
    nv += static_cast<double>(v[i]) * v[i];
  }
  if (nu == 0.0 || nv == 0.0) return 0.0;
  return dot / (std::sqrt(nu) * std::sqrt(nv));
}

// Fraction of tokens (with multiplicity) whose form has no vector.
inline double oov_rate(const Vocabulary& vocab,
                       std::span<const std::string> tokens) {
  if (tokens.empty()) return 0.0;
  std::size_t missing = 0;
  for (const auto& t : tokens) {
    if (!vocab.contains(t)) ++missing;
  }
  return static_cast<double>(missing) / static_cast<double>(tokens.size());
}

}  // namespace lemcluster
