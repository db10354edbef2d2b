#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "themeorder/analysis.hpp"
#include "themeorder/augmented.hpp"
#include "themeorder/chrono.hpp"
#include "themeorder/corpus_io.hpp"
#include "themeorder/error.hpp"
#include "themeorder/fisher.hpp"
#include "themeorder/majority.hpp"
#include "themeorder/segment.hpp"

namespace themeorder::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return read_file(path);
}

// Writes `text` to `path`, or to `fallback` when no path is given.
void emit(const std::string& text, const std::string& path, const std::string& input, std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  std::error_code ec;
  if (input != "-" && std::filesystem::exists(path) && std::filesystem::equivalent(path, input, ec)) {
    throw UsageError("refusing to overwrite the input file '" + input + "'");
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << text;
}

// ---- order ----------------------------------------------------------------

struct OrderConfig {
  std::string input;
  std::string strategy = "augmented";
  std::string threshold = "0.6";
  bool threshold_inclusive = false;
  std::optional<std::uint64_t> seed;
  std::string emit = "order";
  std::string diagnostics_path;
  std::string output;
  bool with_text = false;
};

struct OrderOptions {
  CLI::Option* threshold;
  CLI::Option* inclusive;
  CLI::Option* seed;
};

void check_order_flags(const OrderConfig& cfg, const OrderOptions& opts) {
  const bool augmented = cfg.strategy == "augmented";
  if (!augmented && (opts.threshold->count() > 0 || opts.inclusive->count() > 0)) {
    throw UsageError("--threshold and --threshold-inclusive apply only to --strategy augmented");
  }
  if (cfg.strategy != "mo" && opts.seed->count() > 0) throw UsageError("--seed applies only to --strategy mo");
  if (cfg.emit == "graph" && cfg.strategy != "mo") throw UsageError("--emit graph requires --strategy mo");
  if (cfg.emit == "blocks" && !augmented) throw UsageError("--emit blocks requires --strategy augmented");
  if (cfg.emit == "timestamps" && cfg.strategy == "mo") throw UsageError("--emit timestamps requires --strategy co or augmented");
}

int run_order(const OrderConfig& cfg, Io io) {
  std::vector<std::string> warnings;
  const Corpus corpus = parse_corpus(read_input(cfg.input, io.in), &warnings);
  for (const auto& w : warnings) io.err << "warning: " << w << '\n';

  OrderingResult result;
  if (cfg.strategy == "mo") {
    result = majority_order(corpus, cfg.seed ? TieBreak::seeded(*cfg.seed) : TieBreak::by_id());
  } else if (cfg.strategy == "co") {
    result = chronological_order(corpus);
  } else {
    RelatednessThreshold threshold;
    try {
      threshold.value = parse_rational(cfg.threshold);
    } catch (const ParseError& e) {
      throw UsageError(std::string("--threshold: ") + e.what());
    }
    if (threshold.value < 0) throw UsageError("--threshold must be non-negative");
    threshold.inclusive = cfg.threshold_inclusive;
    result = augmented_order(corpus, threshold);
  }

  std::string text;
  if (cfg.with_text) {
    const DocumentIndex index(corpus);
    std::map<std::string, const Theme*> themes;
    for (const auto& t : corpus.themes) themes.emplace(t.id, &t);
    for (const auto& id : result.sequence) {
      const auto stamp = theme_timestamp(*themes.at(id), index);
      text += id + '\t' + index.document(stamp.stamp_sentence.doc).sentences[stamp.stamp_sentence.pos] + '\n';
    }
  } else {
    for (const auto& id : result.sequence) text += id + '\n';
  }

  std::string diag;
  if (cfg.emit == "graph") {
    diag = dump_graph(std::get<MajorityDiagnostics>(result.diagnostics).graph);
  } else if (cfg.emit == "blocks") {
    diag = dump_blocks(std::get<AugmentedDiagnostics>(result.diagnostics).partition);
  } else if (cfg.emit == "timestamps") {
    if (const auto* co = std::get_if<ChronologicalDiagnostics>(&result.diagnostics)) {
      diag = dump_timestamps(co->stamps);
    } else {
      diag = dump_timestamps(std::get<AugmentedDiagnostics>(result.diagnostics).stamps);
    }
  }

  emit(text, cfg.output, cfg.input, io.out);
  if (!diag.empty()) emit(diag, cfg.diagnostics_path, cfg.input, io.err);
  return kOk;
}

// ---- analyze / compare ------------------------------------------------------

struct AnalyzeConfig {
  std::string input;
  std::optional<std::size_t> k;
  std::optional<double> cutoff;
  std::string linkage = "ward";
  std::string output;
};

int run_analyze(const AnalyzeConfig& cfg, Io io) {
  if (cfg.k.has_value() == cfg.cutoff.has_value()) throw UsageError("give exactly one of --k or --distance-cutoff");
  const OrderingSet set = parse_ordering_set(read_input(cfg.input, io.in));
  const DistanceMatrix matrix = distance_matrix(set);
  ClusterStop stop = cfg.k ? ClusterStop{ClusterCount{*cfg.k}} : ClusterStop{DistanceCutoff{*cfg.cutoff}};
  const LabelPartition blocks = cluster_blocks(matrix, stop, parse_linkage(cfg.linkage));

  std::string text = matrix.to_tsv();
  text += '\n';
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    text += "block_" + std::to_string(b + 1) + ':';
    for (const auto& label : blocks[b]) text += ' ' + label;
    text += '\n';
  }
  emit(text, cfg.output, cfg.input, io.out);
  return kOk;
}

int run_compare(const std::string& input, const std::string& output, Io io) {
  const OrderingSet set = parse_ordering_set(read_input(input, io.in));
  std::string text = "unique_orderings\t" + std::to_string(count_unique_orderings(set)) + "\n\n";
  const std::size_t m = set.orderings.size();
  for (std::size_t j = 0; j < m; ++j) text += "\t" + std::to_string(j + 1);
  text += '\n';
  for (std::size_t i = 0; i < m; ++i) {
    text += std::to_string(i + 1);
    for (std::size_t j = 0; j < m; ++j) text += '\t' + std::to_string(kendall_tau_distance(set.orderings[i], set.orderings[j]));
    text += '\n';
  }
  emit(text, output, input, io.out);
  return kOk;
}

// ---- stats / validate / segment --------------------------------------------

int run_fisher(const std::vector<std::uint64_t>& cells, Io io) {
  const auto r = fisher_exact_one_sided({cells[0], cells[1], cells[2], cells[3]});
  std::ostringstream s;
  s.precision(10);
  s << r.fraction() << '\n' << r.value() << '\n';
  io.out << s.str();
  return kOk;
}

int run_validate(const std::string& input, Io io) {
  std::vector<std::string> warnings;
  CorpusParseOptions options;
  options.validate = false;
  const Corpus corpus = parse_corpus(read_input(input, io.in), &warnings, options);
  for (const auto& w : warnings) io.err << "warning: " << w << '\n';
  const auto violations = validate_corpus(corpus);
  for (const auto& v : violations) io.out << v.describe() << '\n';
  return violations.empty() ? kOk : kInvalid;
}

int run_segment(const std::string& input, std::size_t window, const std::string& output, Io io) {
  if (window == 0) throw UsageError("--window must be at least 1");
  CorpusParseOptions options;
  options.allow_missing_segments = true;
  options.validate = false;
  Corpus corpus = segment_missing(parse_corpus(read_input(input, io.in), nullptr, options), window);
  const auto violations = validate_corpus(corpus);
  if (!violations.empty()) {
    for (const auto& v : violations) io.err << v.describe() << '\n';
    return kInvalid;
  }
  emit(serialize_corpus(corpus), output, input, io.out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  const Io io{in, out, err};
  CLI::App app{"Order sentence themes for multidocument summaries and analyse alternative orderings", "themeorder"};
  app.require_subcommand(1);

  OrderConfig order_cfg;
  auto* order = app.add_subcommand("order", "Order the themes of a corpus");
  order->add_option("input", order_cfg.input, "Corpus JSON file ('-' for stdin)")->required();
  order->add_option("-s,--strategy", order_cfg.strategy, "Ordering strategy")
      ->check(CLI::IsMember({"mo", "co", "augmented"}))
      ->capture_default_str();
  OrderOptions order_opts;
  order_opts.threshold =
      order->add_option("--threshold", order_cfg.threshold, "Relatedness threshold (decimal or p/q)")->capture_default_str();
  order_opts.inclusive = order->add_flag("--threshold-inclusive", order_cfg.threshold_inclusive,
                                         "Relate themes whose ratio equals the threshold");
  order_opts.seed = order->add_option("--seed", order_cfg.seed, "Random tie-break seed for majority ordering");
  order->add_option("--emit", order_cfg.emit, "Diagnostics to write")
      ->check(CLI::IsMember({"order", "blocks", "graph", "timestamps"}))
      ->capture_default_str();
  order->add_option("--diagnostics", order_cfg.diagnostics_path, "Diagnostics file (default: stderr)");
  order->add_option("-o,--output", order_cfg.output, "Output file (default: stdout)");
  order->add_flag("--with-text", order_cfg.with_text, "Append each theme's time stamp sentence");

  AnalyzeConfig analyze_cfg;
  auto* analyze = app.add_subcommand("analyze", "Distance matrix and block clustering over alternative orderings");
  analyze->add_option("input", analyze_cfg.input, "Orderings file ('-' for stdin)")->required();
  analyze->add_option("--k", analyze_cfg.k, "Number of blocks");
  analyze->add_option("--distance-cutoff", analyze_cfg.cutoff, "Stop merging above this distance");
  analyze->add_option("--linkage", analyze_cfg.linkage, "Cluster linkage")
      ->check(CLI::IsMember({"ward", "average", "single", "complete"}))
      ->capture_default_str();
  analyze->add_option("-o,--output", analyze_cfg.output, "Output file (default: stdout)");

  std::string compare_input;
  std::string compare_output;
  auto* compare = app.add_subcommand("compare", "Unique orderings and pairwise Kendall tau distances");
  compare->add_option("input", compare_input, "Orderings file ('-' for stdin)")->required();
  compare->add_option("-o,--output", compare_output, "Output file (default: stdout)");

  std::vector<std::uint64_t> cells;
  auto* stats = app.add_subcommand("stats", "Significance statistics");
  stats->require_subcommand(1);
  auto* fisher = stats->add_subcommand("fisher", "One-sided Fisher exact test on [[a, b], [c, d]]");
  fisher->add_option("cells", cells, "a b c d")->required()->expected(4);

  std::string validate_input;
  auto* validate = app.add_subcommand("validate", "List corpus invariant violations");
  validate->add_option("input", validate_input, "Corpus JSON file ('-' for stdin)")->required();

  std::string segment_input;
  std::string segment_output;
  std::size_t window = 3;
  auto* segment = app.add_subcommand("segment", "Fill missing segment ids with the fallback segmenter");
  segment->add_option("input", segment_input, "Corpus JSON file ('-' for stdin)")->required();
  segment->add_option("--window", window, "Sentences on each side of a gap")->capture_default_str();
  segment->add_option("-o,--output", segment_output, "Output file (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (order->parsed()) {
      check_order_flags(order_cfg, order_opts);
      return run_order(order_cfg, io);
    }
    if (analyze->parsed()) return run_analyze(analyze_cfg, io);
    if (compare->parsed()) return run_compare(compare_input, compare_output, io);
    if (fisher->parsed()) return run_fisher(cells, io);
    if (validate->parsed()) return run_validate(validate_input, io);
    if (segment->parsed()) return run_segment(segment_input, window, segment_output, io);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace themeorder::cli
