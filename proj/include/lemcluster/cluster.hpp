#pragma once

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <vector>

#include "lemcluster/distance.hpp"
#include "lemcluster/embeddings.hpp"
#include "lemcluster/errors.hpp"
#include "lemcluster/hypercluster.hpp"

namespace lemcluster {

// Upper-triangular pairwise distances for one hypercluster.
class CondensedMatrix {
 public:
  explicit CondensedMatrix(std::size_t n)
      : n_(n), values_(n < 2 ? 0 : n * (n - 1) / 2, 0.0) {}

  std::size_t size() const { return n_; }

  std::size_t index_of(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
  }

  double at(std::size_t i, std::size_t j) const {
    return values_[index_of(i, j)];
  }

  void set(std::size_t i, std::size_t j, double v) {
    values_[index_of(i, j)] = v;
  }

 private:
  std::size_t n_;
  std::vector<double> values_;
};

// Average-linkage agglomerative clustering over items 0..n-1, stopped once
// the smallest average inter-cluster distance exceeds t. Merging keeps
// cross-pair distance sums (the size-weighted Lance-Williams update), so a
// cluster-pair average is always its exact raw-pair sum over the pair count.
// Ties on the average are broken by the smallest (min member rank, min
// member rank) pair. Returns clusters ordered by min member rank, members
// in rank order.
template <typename DistFn>
std::vector<std::vector<std::size_t>> agglomerate(std::size_t n,
                                                  DistFn&& dist, double t) {
  if (n == 0) throw UsageError("agglomerate: empty input");
  if (n == 1) return {{0}};

  // Condensed cross-pair sums between live slots; slot i starts as item i.
  const std::size_t pairs = n * (n - 1) / 2;
  std::vector<double> sum(pairs);
  auto idx = [n](std::size_t i, std::size_t j) {
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      sum[idx(i, j)] = dist(i, j);
    }
  }

  std::vector<bool> alive(n, true);
  std::vector<std::size_t> size(n, 1), min_rank(n);
  std::vector<std::vector<std::size_t>> members(n);
  for (std::size_t i = 0; i < n; ++i) {
    min_rank[i] = i;
    members[i] = {i};
  }

  std::size_t live = n;
  while (live > 1) {
    double best_avg = std::numeric_limits<double>::infinity();
    std::size_t best_i = 0, best_j = 0;
    std::size_t best_ra = 0, best_rb = 0;
    bool found = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!alive[j]) continue;
        const double avg =
            sum[idx(i, j)] / static_cast<double>(size[i] * size[j]);
        const std::size_t ra = std::min(min_rank[i], min_rank[j]);
        const std::size_t rb = std::max(min_rank[i], min_rank[j]);
        if (!found || avg < best_avg ||
            (avg == best_avg &&
             (ra < best_ra || (ra == best_ra && rb < best_rb)))) {
          found = true;
          best_avg = avg;
          best_i = i;
          best_j = j;
          best_ra = ra;
          best_rb = rb;
        }
      }
    }
    if (best_avg > t) break;

    // Merge slot j into slot i.
    const std::size_t i = best_i, j = best_j;
    for (std::size_t k = 0; k < n; ++k) {
      if (!alive[k] || k == i || k == j) continue;
      sum[idx(std::min(i, k), std::max(i, k))] +=
          sum[idx(std::min(j, k), std::max(j, k))];
    }
    size[i] += size[j];
    min_rank[i] = std::min(min_rank[i], min_rank[j]);
    members[i].insert(members[i].end(), members[j].begin(), members[j].end());
    members[j].clear();
    alive[j] = false;
    --live;
  }

  std::vector<std::vector<std::size_t>> out;
  out.reserve(live);
  for (std::size_t i = 0; i < n; ++i) {
    if (!alive[i]) continue;
    std::sort(members[i].begin(), members[i].end());
    out.push_back(std::move(members[i]));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

inline std::vector<std::vector<std::size_t>> agglomerate(
    const CondensedMatrix& d, double t) {
  return agglomerate(
      d.size(), [&d](std::size_t i, std::size_t j) { return d.at(i, j); }, t);
}

struct ClusterMeta {
  std::string stem;
  std::uint32_t size = 0;
};

// The trained model: one dense cluster id per vocabulary form, grouped under
// stems. Entries keep their emission order so the TSV round-trips exactly.
struct Lexicon {
  struct Entry {
    std::string form;
    std::uint32_t cluster = 0;
    std::string stem;
  };

  std::vector<Entry> entries;
  std::unordered_map<std::string, std::uint32_t> assignment;
  std::vector<ClusterMeta> cluster_meta;              // by cluster id
  std::vector<std::vector<std::string>> members;      // by cluster id
  std::unordered_map<std::string, std::vector<std::uint32_t>> stem_clusters;
  Params params;

  std::size_t cluster_count() const { return cluster_meta.size(); }

  void add_member(std::uint32_t cluster, const std::string& form) {
    entries.push_back({form, cluster, cluster_meta[cluster].stem});
    assignment.emplace(form, cluster);
    members[cluster].push_back(form);
    ++cluster_meta[cluster].size;
  }

  std::uint32_t new_cluster(const std::string& stem_key) {
    const auto id = static_cast<std::uint32_t>(cluster_meta.size());
    cluster_meta.push_back({stem_key, 0});
    members.emplace_back();
    stem_clusters[stem_key].push_back(id);
    return id;
  }
};

namespace detail {

inline std::vector<std::vector<std::size_t>> cluster_block(
    const Vocabulary& vocab, const std::vector<std::uint32_t>& block,
    const Params& p) {
  std::vector<PreparedForm> prepared;
  prepared.reserve(block.size());
  for (std::uint32_t v : block) {
    prepared.push_back(prepare_form(vocab[v].form, vocab));
  }
  return agglomerate(
      block.size(),
      [&](std::size_t i, std::size_t j) {
        return pair_distance(prepared[i], prepared[j], p);
      },
      p.t);
}

}  // namespace detail

// Partitions the vocabulary into stem blocks, clusters each block, and
// assigns dense cluster ids in sorted-stem order. Blocks are independent,
// so they may be processed by any number of threads; the id pass is
// serialized, which keeps the result identical for any thread count.
inline Lexicon build_model(const Vocabulary& vocab, const Params& p,
                           unsigned threads = 0) {
  p.validate();
  HyperclusterSet set = partition(vocab, p.K);

  std::vector<const std::vector<std::uint32_t>*> blocks;
  std::vector<std::string_view> stems;
  blocks.reserve(set.blocks.size());
  for (const auto& [st, members] : set.blocks) {
    stems.push_back(st);
    blocks.push_back(&members);
  }

  std::vector<std::vector<std::vector<std::size_t>>> results(blocks.size());
  if (threads == 0) threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  threads = std::min<unsigned>(threads, std::max<std::size_t>(blocks.size(), 1));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= blocks.size()) break;
      results[b] = detail::cluster_block(vocab, *blocks[b], p);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  Lexicon lex;
  lex.params = p;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::string stem_key(stems[b]);
    for (const auto& cluster : results[b]) {
      const std::uint32_t id = lex.new_cluster(stem_key);
      for (std::size_t item : cluster) {
        lex.add_member(id, vocab[(*blocks[b])[item]].form);
      }
    }
  }
  return lex;
}

// One clustering step for a single form. In-vocabulary forms (and forms
// already seen this session) return their existing cluster; anything else
// joins the closest cluster of its stem block when the average distance is
// strictly below t, or opens a fresh cluster. Session clusters persist and
// their members count in later calls, so calls mutate the lexicon and must
// be serialized; callers that want parallel assignment have to shard by
// stem.
inline std::uint32_t assign(std::string_view form, Lexicon& lex,
                            const Vocabulary& vocab, const Params& p) {
  const std::string key(form);
  if (auto it = lex.assignment.find(key); it != lex.assignment.end()) {
    return it->second;
  }

  const std::string stem_key = stem(form, p.K);
  double best_avg = std::numeric_limits<double>::infinity();
  std::uint32_t best_id = 0;
  bool found = false;
  if (auto bit = lex.stem_clusters.find(stem_key);
      bit != lex.stem_clusters.end()) {
    const PreparedForm pf = prepare_form(form, vocab);
    for (std::uint32_t cid : bit->second) {
      const auto& ms = lex.members[cid];
      if (ms.empty()) continue;
      double sum = 0.0;
      for (const auto& m : ms) {
        sum += pair_distance(pf, prepare_form(m, vocab), p);
      }
      const double avg = sum / static_cast<double>(ms.size());
      if (!found || avg < best_avg) {
        found = true;
        best_avg = avg;
        best_id = cid;
      }
    }
  }

  if (found && best_avg < p.t) {
    lex.add_member(best_id, key);
    return best_id;
  }
  const std::uint32_t id = lex.new_cluster(stem_key);
  lex.add_member(id, key);
  return id;
}

namespace detail {

inline std::string format_double(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

inline double parse_double_or_throw(std::string_view s, const std::string& path,
                                    std::size_t line) {
  double v = 0.0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw FormatError(path, line, "bad numeric value '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace detail

inline void save_lexicon(const Lexicon& lex, std::ostream& out) {
  out << "#params\tt=" << detail::format_double(lex.params.t)
      << "\tK=" << lex.params.K << "\tN=" << lex.params.N
      << "\tmode=" << to_string(lex.params.mode) << '\n';
  for (const auto& e : lex.entries) {
    out << e.form << '\t' << e.cluster << '\t' << e.stem << '\n';
  }
}

inline void save_lexicon(const Lexicon& lex, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write lexicon file: " + path);
  save_lexicon(lex, out);
  if (!out.flush()) throw IoError("failed writing lexicon file: " + path);
}

inline Lexicon load_lexicon(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open lexicon file: " + path);

  std::string line;
  if (!std::getline(in, line)) throw FormatError(path, 1, "empty lexicon file");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  Lexicon lex;
  if (line.rfind("#params\t", 0) != 0) {
    throw FormatError(path, 1, "missing #params header");
  }
  std::string_view rest(line);
  rest.remove_prefix(8);
  while (!rest.empty()) {
    const std::size_t tab = rest.find('\t');
    const std::string_view field = rest.substr(0, tab);
    const std::size_t eq = field.find('=');
    if (eq == std::string_view::npos) {
      throw FormatError(path, 1, "malformed #params field");
    }
    const std::string_view k = field.substr(0, eq);
    const std::string_view v = field.substr(eq + 1);
    if (k == "t") {
      lex.params.t = detail::parse_double_or_throw(v, path, 1);
    } else if (k == "K") {
      std::size_t kk = 0;
      if (!lemcluster::detail::parse_size(v, kk) || kk == 0) {
        throw FormatError(path, 1, "bad K value");
      }
      lex.params.K = static_cast<int>(kk);
    } else if (k == "N") {
      std::size_t n = 0;
      if (!lemcluster::detail::parse_size(v, n)) {
        throw FormatError(path, 1, "bad N value");
      }
      lex.params.N = n;
    } else if (k == "mode") {
      auto m = parse_distance_mode(v);
      if (!m) throw FormatError(path, 1, "unknown mode '" + std::string(v) + "'");
      lex.params.mode = *m;
    } else {
      throw FormatError(path, 1, "unknown #params key '" + std::string(k) + "'");
    }
    if (tab == std::string_view::npos) break;
    rest.remove_prefix(tab + 1);
  }

  std::size_t line_no = 1;
  std::unordered_map<std::uint32_t, std::uint32_t> id_map;  // file id -> dense
  std::vector<std::uint32_t> file_ids;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t t1 = line.find('\t');
    const std::size_t t2 = t1 == std::string::npos ? std::string::npos
                                                   : line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos ||
        line.find('\t', t2 + 1) != std::string::npos) {
      throw FormatError(path, line_no, "expected form<TAB>cluster<TAB>stem");
    }
    const std::string form = line.substr(0, t1);
    const std::string_view id_str(line.data() + t1 + 1, t2 - t1 - 1);
    const std::string stem_key = line.substr(t2 + 1);
    std::size_t raw_id = 0;
    if (!lemcluster::detail::parse_size(id_str, raw_id)) {
      throw FormatError(path, line_no, "bad cluster id");
    }
    if (form.empty()) throw FormatError(path, line_no, "empty form");

    const auto fid = static_cast<std::uint32_t>(raw_id);
    std::uint32_t dense;
    if (auto it = id_map.find(fid); it != id_map.end()) {
      dense = it->second;
      if (lex.cluster_meta[dense].stem != stem_key) {
        throw FormatError(path, line_no,
                          "cluster " + std::to_string(raw_id) +
                              " spans multiple stems");
      }
    } else {
      dense = lex.new_cluster(stem_key);
      id_map.emplace(fid, dense);
      file_ids.push_back(fid);
    }
    if (lex.assignment.count(form)) {
      throw FormatError(path, line_no, "duplicate form '" + form + "'");
    }
    lex.add_member(dense, form);
  }

  // Build emits dense ids in order, so a round-trip keeps them verbatim;
  // reject files that would renumber, to keep save(load(f)) == f honest.
  for (std::size_t i = 0; i < file_ids.size(); ++i) {
    if (file_ids[i] != i) {
      throw FormatError(path, 1,
                        "cluster ids must be dense and first-seen in order");
    }
  }
  return lex;
}

}  // namespace lemcluster
