#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "lemcluster/cluster.hpp"
#include "lemcluster/conllu.hpp"
#include "lemcluster/embeddings.hpp"
#include "lemcluster/errors.hpp"
#include "lemcluster/evaluate.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitFormat = 3;
constexpr int kExitIo = 4;

struct Options {
  std::string vectors;
  std::string treebank;
  std::string lexicon;
  std::string out;
  std::string name;
  std::string mode = "combined";
  double t = 0.4;
  int K = 3;
  std::size_t N = 100000;
  unsigned threads = 0;  // 0 = auto
};

lemcluster::Params make_params(const Options& o) {
  lemcluster::Params p;
  p.t = o.t;
  p.K = o.K;
  p.N = o.N;
  const auto mode = lemcluster::parse_distance_mode(o.mode);
  if (!mode) {
    throw lemcluster::UsageError(
        "unknown --mode '" + o.mode +
        "' (expected combined, jw_only or cos_only)");
  }
  p.mode = *mode;
  p.validate();
  return p;
}

// Every command echoes the resolved parameters so reported numbers can be
// reproduced from the log alone.
void echo_params(const lemcluster::Params& p, unsigned threads) {
  std::fprintf(stderr,
               "# params: t=%s K=%d N=%zu mode=%s jw.prefix_scale=%s "
               "jw.max_prefix=%d jw.boost_threshold=%s threads=%u\n",
               lemcluster::detail::format_double(p.t).c_str(), p.K, p.N,
               std::string(lemcluster::to_string(p.mode)).c_str(),
               lemcluster::detail::format_double(p.jw.prefix_scale).c_str(),
               p.jw.max_prefix,
               lemcluster::detail::format_double(p.jw.boost_threshold).c_str(),
               threads);
}

int cmd_build(const Options& o) {
  const lemcluster::Params p = make_params(o);
  unsigned threads = o.threads;
  if (threads == 0) threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  echo_params(p, threads);

  const auto t0 = std::chrono::steady_clock::now();
  const lemcluster::Vocabulary vocab = lemcluster::load_vectors(o.vectors, p.N);
  if (vocab.size() == 0) {
    std::fprintf(stderr, "warning: vocabulary is empty, writing empty lexicon\n");
  }
  const lemcluster::HyperclusterSet blocks = lemcluster::partition(vocab, p.K);
  lemcluster::Lexicon lex = lemcluster::build_model(vocab, p, threads);
  lemcluster::save_lexicon(lex, o.out);
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;

  // Timing goes to stderr: stdout stays byte-identical across reruns.
  std::printf("forms: %zu\nblocks: %zu\nclusters: %zu\n", vocab.size(),
              blocks.block_count(), lex.cluster_count());
  std::fprintf(stderr, "elapsed: %.3f s\n", dt.count());
  return 0;
}

int cmd_assign(const Options& o, const CLI::App* sub) {
  lemcluster::Lexicon lex = lemcluster::load_lexicon(o.lexicon);
  lemcluster::Params p = lex.params;
  if (sub->count("--t")) {
    std::fprintf(stderr, "warning: --t overrides the lexicon's build-time value\n");
    p.t = o.t;
  }
  if (sub->count("--mode")) {
    const auto mode = lemcluster::parse_distance_mode(o.mode);
    if (!mode) throw lemcluster::UsageError("unknown --mode '" + o.mode + "'");
    std::fprintf(stderr, "warning: --mode overrides the lexicon's build-time value\n");
    p.mode = *mode;
  }
  p.validate();
  echo_params(p, 1);

  const lemcluster::Vocabulary vocab = lemcluster::load_vectors(o.vectors, p.N);
  std::string line;
  while (std::getline(std::cin, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::uint32_t id = lemcluster::assign(line, lex, vocab, p);
    std::printf("%s\t%u\n", line.c_str(), id);
  }
  return 0;
}

std::string default_name(const std::string& path) {
  std::string base = path;
  const std::size_t slash = base.find_last_of('/');
  if (slash != std::string::npos) base = base.substr(slash + 1);
  const std::size_t dot = base.rfind(".conllu");
  if (dot != std::string::npos) base = base.substr(0, dot);
  return base;
}

int cmd_eval(const Options& o, const CLI::App* sub) {
  lemcluster::Lexicon lex = lemcluster::load_lexicon(o.lexicon);
  lemcluster::Params p = lex.params;
  if (sub->count("--t")) {
    std::fprintf(stderr, "warning: --t overrides the lexicon's build-time value\n");
    p.t = o.t;
  }
  if (sub->count("--mode")) {
    const auto mode = lemcluster::parse_distance_mode(o.mode);
    if (!mode) throw lemcluster::UsageError("unknown --mode '" + o.mode + "'");
    std::fprintf(stderr, "warning: --mode overrides the lexicon's build-time value\n");
    p.mode = *mode;
  }
  p.validate();
  echo_params(p, 1);

  const lemcluster::Vocabulary vocab = lemcluster::load_vectors(o.vectors, p.N);
  const std::vector<lemcluster::TokenRecord> tokens =
      lemcluster::read_tokens(o.treebank);
  if (tokens.empty()) {
    throw lemcluster::FormatError("treebank has no tokens: " + o.treebank);
  }

  std::vector<std::string> forms;
  forms.reserve(tokens.size());
  for (const auto& t : tokens) forms.push_back(t.form);
  const double oov = lemcluster::oov_rate(vocab, forms);

  const lemcluster::EvalReport r = lemcluster::evaluate_run(tokens, lex, vocab, p);
  const std::string name = o.name.empty() ? default_name(o.treebank) : o.name;
  const char* bmode =
      r.baseline_mode == lemcluster::BaselineMode::form ? "form" : "form5";

  std::fprintf(stderr, "treebank: %s  tokens: %zu  oov_rate: %.2f%%\n",
               name.c_str(), tokens.size(), oov * 100.0);
  std::fprintf(stderr, "homogeneity: %.4f  completeness: %.4f  v-measure: %.4f\n",
               r.homogeneity, r.completeness, r.v_measure);
  std::fprintf(stderr, "errors, %% of (1 - v-measure):\n");
  std::fprintf(stderr, "  baseline[form]:  %.2f\n", r.baseline_form_err * 100.0);
  std::fprintf(stderr, "  baseline[form5]: %.2f\n", r.baseline_form5_err * 100.0);
  std::fprintf(stderr, "  baseline[best=%s]: %.2f\n", bmode, r.baseline_err * 100.0);
  std::fprintf(stderr, "  ours:   %.2f\n", r.our_err * 100.0);
  std::fprintf(stderr, "  oracle: %.2f\n", r.oracle_err * 100.0);
  if (r.err_reduction.has_value()) {
    std::fprintf(stderr, "error reduction: %.1f%%\n", *r.err_reduction);
  } else {
    std::fprintf(stderr, "error reduction: n/a (baseline equals upper bound)\n");
  }

  char row[512];
  if (r.err_reduction.has_value()) {
    std::snprintf(row, sizeof row, "%s\t%s\t%.2f\t%.2f\t%.2f\t%.1f",
                  name.c_str(), bmode, r.baseline_err * 100.0,
                  r.our_err * 100.0, r.oracle_err * 100.0, *r.err_reduction);
  } else {
    std::snprintf(row, sizeof row, "%s\t%s\t%.2f\t%.2f\t%.2f\tn/a",
                  name.c_str(), bmode, r.baseline_err * 100.0,
                  r.our_err * 100.0, r.oracle_err * 100.0);
  }
  std::printf("%s\n", row);
  if (!o.out.empty()) {
    std::ofstream out(o.out, std::ios::app);
    if (!out) throw lemcluster::IoError("cannot write results file: " + o.out);
    out << row << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unsupervised lemmatization by clustering word forms"};
  app.require_subcommand(1);
  Options o;

  CLI::App* build = app.add_subcommand(
      "build", "cluster a vector-file vocabulary into a lexicon");
  build->add_option("--vectors", o.vectors, "word vector file")->required();
  build->add_option("--out", o.out, "lexicon file to write")->required();
  build->add_option("--t", o.t, "merge threshold");
  build->add_option("--K", o.K, "stem length");
  build->add_option("--N", o.N, "vocabulary cap");
  build->add_option("--mode", o.mode, "distance: combined, jw_only, cos_only");
  build->add_option("--threads", o.threads, "worker threads (0 = auto)");

  CLI::App* assign = app.add_subcommand(
      "assign", "assign cluster ids to forms read from stdin");
  assign->add_option("--lexicon", o.lexicon, "lexicon file")->required();
  assign->add_option("--vectors", o.vectors, "word vector file")->required();
  assign->add_option("--t", o.t, "override merge threshold");
  assign->add_option("--mode", o.mode, "override distance mode");

  CLI::App* eval = app.add_subcommand(
      "eval", "score a lexicon against a CoNLL-U treebank");
  eval->add_option("--lexicon", o.lexicon, "lexicon file")->required();
  eval->add_option("--vectors", o.vectors, "word vector file")->required();
  eval->add_option("--treebank", o.treebank, "CoNLL-U file")->required();
  eval->add_option("--name", o.name, "dataset name for the results row");
  eval->add_option("--out", o.out, "append the results row to this file");
  eval->add_option("--t", o.t, "override merge threshold");
  eval->add_option("--mode", o.mode, "override distance mode");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (build->parsed()) return cmd_build(o);
    if (assign->parsed()) return cmd_assign(o, assign);
    if (eval->parsed()) return cmd_eval(o, eval);
    return kExitUsage;
  } catch (const lemcluster::UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const lemcluster::FormatError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFormat;
  } catch (const lemcluster::IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
