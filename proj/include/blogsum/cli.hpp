#pragma once

// Command-line front end. Kept in a header so tests can drive the exact code
// path of the `blogsum` binary through `run_cli` with string streams.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "blogsum/error.hpp"
#include "blogsum/evaluation.hpp"
#include "blogsum/ingestion.hpp"
#include "blogsum/linguistic.hpp"
#include "blogsum/scoring.hpp"
#include "blogsum/summarizer.hpp"

namespace blogsum::cli {

enum class OutputFormat { Text, Record, Matrices };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string format;  // empty: choose by file extension
  std::optional<std::size_t> k;
  std::optional<double> ratio;
  std::string variant = "literal";
  std::string order = "score";
  std::string stemmer = "porter";
  std::string stopwords_path;
  std::string lexicon_path;
  std::string comment_selector = "comment";
  std::string output = "text";
  bool include_zero = false;
  std::string model_path;
  std::string candidate_path;
  std::string candidate_text;
  std::vector<std::string> inputs;
};

/// Options resolved from a RunConfig; shared read-only by worker threads.
struct Resolved {
  std::optional<InputFormat> format;
  SummaryOptions summary;
  CommentSelector selector;
  OutputFormat output = OutputFormat::Text;
};

inline Resolved resolve(const RunConfig& config) {
  Resolved r;
  if (!config.format.empty()) {
    r.format = parse_input_format(config.format);
    if (!r.format) throw Error(ErrorKind::InvalidConfig, "unknown --format " + config.format);
  }
  if (config.k && config.ratio) throw Error(ErrorKind::InvalidConfig, "--k and --ratio are exclusive");
  if (config.k) r.summary.length = TopK{*config.k};
  if (config.ratio) r.summary.length = TopRatio{*config.ratio};
  resolve_k(r.summary.length, 1);  // validates k / ratio up front
  r.summary.variant = config.variant == "coverage" ? ScoreVariant::Coverage : ScoreVariant::Literal;
  r.summary.ordering = config.order == "document" ? Ordering::Document : Ordering::Score;
  r.summary.include_zero = config.include_zero;
  r.summary.pipeline.stemmer = config.stemmer == "none" ? StemmerKind::None : StemmerKind::Porter;
  if (!config.stopwords_path.empty()) r.summary.pipeline.stoplist = Stoplist::load(config.stopwords_path);
  if (!config.lexicon_path.empty()) r.summary.pipeline.lexicon = Lexicon::load(config.lexicon_path);
  r.selector = CommentSelector::parse(config.comment_selector);
  if (config.output == "record") r.output = OutputFormat::Record;
  if (config.output == "matrices") r.output = OutputFormat::Matrices;
  return r;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::MalformedInput, "cannot open file", path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline BlogDocument load_document(const std::string& path, const Resolved& r) {
  const auto format = r.format.value_or(input_format_for_path(path));
  ParseOptions opts{r.selector, path};
  return parse_document(read_file(path), format, opts);
}

struct Emission {
  std::string out;
  std::string err;
  bool ok = true;
};

inline std::string diagnostic(const Error& e, const std::string& source_id) {
  return "blogsum: " + std::string(e.with_source(source_id).what()) + "\n";
}

/// Runs `work` over every input, concurrently, and returns the emissions in
/// input order so output is identical to a sequential run.
template <typename Work>
std::vector<Emission> process_all(const std::vector<std::string>& inputs, Work&& work) {
  std::vector<Emission> results(inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) {
      try {
        results[i] = work(inputs[i]);
      } catch (const Error& e) {
        results[i] = {{}, diagnostic(e, inputs[i]), false};
      } catch (const std::exception& e) {
        results[i] = {{}, "blogsum: " + inputs[i] + ": " + e.what() + "\n", false};
      }
    }
  };
  const std::size_t n_threads =
      std::min<std::size_t>(inputs.size(), std::max(1u, std::thread::hardware_concurrency()));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
  }
  return results;
}

inline int emit(const std::vector<Emission>& results, std::ostream& out, std::ostream& err) {
  int status = kExitOk;
  for (const auto& r : results) {
    out << r.out;
    err << r.err;
    if (!r.ok) status = kExitInputFailure;
  }
  return status;
}

inline nlohmann::json score_json(const Rational& score) {
  if (score.is_integer()) return score.num();
  return score.to_double();
}

inline std::string format_summary(const BlogDocument& doc, const DocumentAnalysis& analysis,
                                  const RankedSummary& summary, const Resolved& r) {
  const auto& opts = r.summary;
  if (r.output == OutputFormat::Matrices)
    return "# source: " + doc.source_id + "\n" + dump_matrices(analysis.tsm, analysis.pfm);
  if (r.output == OutputFormat::Record) {
    nlohmann::json j;
    j["source_id"] = doc.source_id;
    j["title"] = doc.title;
    j["k"] = summary.k;
    j["variant"] = std::string(to_string(opts.variant));
    j["order"] = std::string(to_string(opts.ordering));
    j["n_sentences"] = analysis.sentences.size();
    j["sentences"] = nlohmann::json::array();
    for (const auto& s : summary.selected) {
      j["sentences"].push_back({{"index", s.sentence.index},
                                {"score", score_json(s.score)},
                                {"score_exact", s.score.str()},
                                {"distinct_hits", s.distinct_hits},
                                {"text", s.sentence.raw_text}});
    }
    return j.dump() + "\n";
  }
  std::ostringstream os;
  os << "# source: " << doc.source_id << "\n"
     << "# title: " << doc.title << "\n"
     << "# k: " << summary.k << "  variant: " << to_string(opts.variant)
     << "  order: " << to_string(opts.ordering) << "  selected: " << summary.selected.size()
     << " of " << analysis.sentences.size() << "\n";
  for (const auto& s : summary.selected)
    os << "S" << s.sentence.index << "\tscore=" << s.score.str() << "\thits=" << s.distinct_hits
       << "\t" << s.sentence.raw_text << "\n";
  os << "\n";
  return os.str();
}

inline int cmd_summarize(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Resolved r = resolve(config);
  auto results = process_all(config.inputs, [&](const std::string& path) {
    const BlogDocument doc = load_document(path, r);
    try {
      const auto analysis = analyze(doc, r.summary);
      const auto summary = summarize(analysis, r.summary);
      return Emission{format_summary(doc, analysis, summary, r), {}, true};
    } catch (const Error& e) {
      throw e.with_source(doc.source_id);
    }
  });
  return emit(results, out, err);
}

inline int cmd_matrices(RunConfig config, std::ostream& out, std::ostream& err) {
  config.output = "matrices";
  return cmd_summarize(config, out, err);
}

inline std::string format_report(const EvaluationReport& report, const std::string& candidate_id,
                                 const std::string& model_id, OutputFormat output) {
  if (output == OutputFormat::Record) {
    nlohmann::json j;
    j["candidate"] = candidate_id;
    j["model"] = model_id;
    j["n_common"] = report.n_common;
    j["n_sum"] = report.n_sum;
    j["n_msum"] = report.n_msum;
    j["precision"] = report.precision.str();
    j["recall"] = report.recall.str();
    j["precision_percent"] = format_percent(report.precision);
    j["recall_percent"] = format_percent(report.recall);
    j["matched_pairs"] = nlohmann::json::array();
    for (const auto& p : report.matched_pairs) j["matched_pairs"].push_back({p.candidate, p.model});
    return j.dump() + "\n";
  }
  std::ostringstream os;
  os << "# candidate: " << candidate_id << "  model: " << model_id << "\n"
     << "P " << format_percent(report.precision) << "% R " << format_percent(report.recall) << "%\n"
     << "n_common " << report.n_common << "  n_sum " << report.n_sum << "  n_msum " << report.n_msum
     << "\n"
     << "precision " << report.precision.str() << "  recall " << report.recall.str() << "\n"
     << "pairs";
  for (const auto& p : report.matched_pairs) os << " " << p.candidate << ":" << p.model;
  os << "\n\n";
  return os.str();
}

inline int cmd_evaluate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Resolved r = resolve(config);
  std::vector<std::string> model;
  try {
    model = load_summary_file(config.model_path);
    if (model.empty()) throw Error(ErrorKind::EmptyModelSummary, "model summary has no sentences");
  } catch (const Error& e) {
    err << diagnostic(e, config.model_path);
    return kExitInputFailure;
  }
  const auto output = r.output == OutputFormat::Record ? OutputFormat::Record : OutputFormat::Text;

  if (!config.candidate_path.empty() || !config.candidate_text.empty()) {
    const bool inline_text = config.candidate_path.empty();
    const std::string id = inline_text ? "<inline>" : config.candidate_path;
    try {
      std::vector<std::string> candidate;
      if (inline_text) {
        for (const auto& s : segment_sentences(config.candidate_text, r.summary.segmenter))
          candidate.push_back(s.raw_text);
      } else {
        candidate = load_summary_file(config.candidate_path);
      }
      out << format_report(evaluate(candidate, model), id, config.model_path, output);
      return kExitOk;
    } catch (const Error& e) {
      err << diagnostic(e, id);
      return kExitInputFailure;
    }
  }

  auto results = process_all(config.inputs, [&](const std::string& path) {
    const BlogDocument doc = load_document(path, r);
    try {
      const auto summary = summarize(doc, r.summary);
      return Emission{format_report(evaluate(summary, model), doc.source_id, config.model_path, output),
                      {}, true};
    } catch (const Error& e) {
      throw e.with_source(doc.source_id);
    }
  });
  return emit(results, out, err);
}

inline void add_pipeline_options(CLI::App& cmd, RunConfig& c) {
  cmd.add_option("--format", c.format, "Input format (default: by file extension)")
      ->check(CLI::IsMember({"plain", "record", "html"}));
  auto* k = cmd.add_option("--k", c.k, "Number of sentences to select")->check(CLI::PositiveNumber);
  auto* ratio = cmd.add_option("--ratio", c.ratio, "Fraction of sentences to select (default 0.2)")
                    ->check(CLI::Range(0.0, 1.0));
  k->excludes(ratio);
  cmd.add_option("--variant", c.variant, "Sentence score variant")
      ->check(CLI::IsMember({"literal", "coverage"}));
  cmd.add_option("--order", c.order, "Summary ordering")->check(CLI::IsMember({"score", "document"}));
  cmd.add_option("--stemmer", c.stemmer, "Stemmer")->check(CLI::IsMember({"porter", "none"}));
  cmd.add_option("--stopwords", c.stopwords_path, "Stoplist file, one term per line")
      ->check(CLI::ExistingFile);
  cmd.add_option("--lexicon", c.lexicon_path, "Lemma lexicon, surface<TAB>lemma per line")
      ->check(CLI::ExistingFile);
  cmd.add_option("--comment-selector", c.comment_selector,
                 "id/class substring marking comment regions in HTML ('#x' ids only, '.x' classes only)");
  cmd.add_flag("--include-zero", c.include_zero, "Allow zero-score sentences in the summary");
}

/// Entry point shared by the binary and the tests. `args` excludes argv[0].
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Title-driven extractive summarizer for blog pages", "blogsum"};
  app.require_subcommand(1);
  RunConfig config;

  auto* summarize_cmd = app.add_subcommand("summarize", "Summarize each input document");
  add_pipeline_options(*summarize_cmd, config);
  summarize_cmd->add_option("--output", config.output, "Output format")
      ->check(CLI::IsMember({"text", "record", "matrices"}));
  summarize_cmd->add_option("inputs", config.inputs, "Input files")->required();

  auto* matrices_cmd = app.add_subcommand("matrices", "Dump the title-sentence and presence matrices");
  add_pipeline_options(*matrices_cmd, config);
  matrices_cmd->add_option("inputs", config.inputs, "Input files")->required();

  auto* evaluate_cmd = app.add_subcommand("evaluate", "Precision and recall against a model summary");
  add_pipeline_options(*evaluate_cmd, config);
  evaluate_cmd->add_option("--output", config.output, "Output format")
      ->check(CLI::IsMember({"text", "record"}));
  evaluate_cmd->add_option("--model", config.model_path, "Model summary, one sentence per line")
      ->required()
      ->check(CLI::ExistingFile);
  auto* cand = evaluate_cmd->add_option("--candidate", config.candidate_path,
                                        "Candidate summary file, one sentence per line")
                   ->check(CLI::ExistingFile);
  auto* cand_text =
      evaluate_cmd->add_option("--candidate-text", config.candidate_text, "Candidate summary as running text");
  auto* docs = evaluate_cmd->add_option("inputs", config.inputs, "Documents to summarize and evaluate");
  cand->excludes(cand_text);
  cand->excludes(docs);
  cand_text->excludes(docs);

  std::vector<std::string> argv_storage{"blogsum"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*summarize_cmd) return cmd_summarize(config, out, err);
    if (*matrices_cmd) return cmd_matrices(config, out, err);
    if (evaluate_cmd->parsed()) {
      if (config.candidate_path.empty() && config.candidate_text.empty() && config.inputs.empty()) {
        err << "blogsum: evaluate needs --candidate, --candidate-text or input documents\n";
        return kExitUsage;
      }
      return cmd_evaluate(config, out, err);
    }
  } catch (const Error& e) {
    err << "blogsum: " << e.what() << "\n";
    return e.kind() == ErrorKind::InvalidConfig || e.kind() == ErrorKind::InvalidK ? kExitUsage
                                                                                   : kExitInputFailure;
  }
  return kExitUsage;
}

}  // namespace blogsum::cli
