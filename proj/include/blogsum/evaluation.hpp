#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <iterator>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "blogsum/error.hpp"
#include "blogsum/rational.hpp"
#include "blogsum/scoring.hpp"
#include "blogsum/utf8.hpp"

namespace blogsum {

/// Form used to decide whether two summary sentences are the same sentence:
/// folded to lowercase, whitespace collapsed, trailing . ! ? removed.
inline std::string sentence_match_key(std::string_view sentence) {
  std::string key = utf8::collapse_whitespace(utf8::fold(sentence));
  while (!key.empty() && (key.back() == '.' || key.back() == '!' || key.back() == '?' ||
                          key.back() == ' '))
    key.pop_back();
  return key;
}

struct MatchedPair {
  std::size_t candidate;  // 1-based position in the candidate list
  std::size_t model;      // 1-based position in the model list

  friend bool operator==(const MatchedPair&, const MatchedPair&) = default;
};

/// Greedy one-to-one matching: each candidate, in order, takes the first
/// still-unmatched model sentence with the same match key.
inline std::vector<MatchedPair> match_sentences(const std::vector<std::string>& candidate,
                                                const std::vector<std::string>& model) {
  std::vector<std::string> model_keys;
  model_keys.reserve(model.size());
  for (const auto& m : model) model_keys.push_back(sentence_match_key(m));
  std::vector<bool> used(model.size(), false);
  std::vector<MatchedPair> pairs;
  for (std::size_t c = 0; c < candidate.size(); ++c) {
    const auto key = sentence_match_key(candidate[c]);
    for (std::size_t m = 0; m < model.size(); ++m) {
      if (!used[m] && model_keys[m] == key) {
        used[m] = true;
        pairs.push_back({c + 1, m + 1});
        break;
      }
    }
  }
  return pairs;
}

struct PrecisionRecall {
  Rational precision;
  Rational recall;
};

/// P = n_common / n_sum, R = n_common / n_msum, as exact fractions.
inline PrecisionRecall precision_recall(std::size_t n_common, std::size_t n_sum, std::size_t n_msum) {
  if (n_common > n_sum || n_common > n_msum)
    throw Error(ErrorKind::InvalidConfig, "n_common exceeds a summary size");
  if (n_sum == 0) throw Error(ErrorKind::UndefinedMetric, "precision undefined: candidate summary is empty");
  if (n_msum == 0) throw Error(ErrorKind::UndefinedMetric, "recall undefined: model summary is empty");
  return {Rational(n_common, n_sum), Rational(n_common, n_msum)};
}

enum class PercentRounding {
  HalfUp,    // 2/7 -> "28.6"
  Truncate,  // 2/7 -> "28.5"
};

/// Fraction shown as a percentage with one decimal, e.g. 6/7 -> "85.7".
inline std::string format_percent(const Rational& value, PercentRounding rounding = PercentRounding::HalfUp) {
  using wide = unsigned __int128;
  const wide num = static_cast<wide>(value.num()) * 1000;
  const wide den = value.den();
  const wide tenths = rounding == PercentRounding::HalfUp ? (2 * num + den) / (2 * den) : num / den;
  const auto whole = static_cast<std::uint64_t>(tenths / 10);
  const auto frac = static_cast<unsigned>(tenths % 10);
  return std::to_string(whole) + "." + std::to_string(frac);
}

struct EvaluationReport {
  std::size_t n_common = 0;
  std::size_t n_sum = 0;
  std::size_t n_msum = 0;
  Rational precision;
  Rational recall;
  std::vector<MatchedPair> matched_pairs;
};

inline EvaluationReport evaluate(const std::vector<std::string>& candidate,
                                 const std::vector<std::string>& model) {
  if (model.empty()) throw Error(ErrorKind::EmptyModelSummary, "model summary has no sentences");
  EvaluationReport report;
  report.matched_pairs = match_sentences(candidate, model);
  report.n_common = report.matched_pairs.size();
  report.n_sum = candidate.size();
  report.n_msum = model.size();
  const auto pr = precision_recall(report.n_common, report.n_sum, report.n_msum);
  report.precision = pr.precision;
  report.recall = pr.recall;
  return report;
}

inline EvaluationReport evaluate(const RankedSummary& summary, const std::vector<std::string>& model) {
  std::vector<std::string> candidate;
  candidate.reserve(summary.selected.size());
  for (const auto& s : summary.selected) candidate.push_back(s.sentence.raw_text);
  return evaluate(candidate, model);
}

/// One sentence per line; blank lines are ignored.
inline std::vector<std::string> read_summary_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    const auto trimmed = utf8::trim(line);
    if (!trimmed.empty()) lines.emplace_back(trimmed);
  }
  return lines;
}

inline std::vector<std::string> load_summary_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::MalformedInput, path.string() + ": cannot read summary file");
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (const auto bad = utf8::find_invalid(content))
    throw Error(ErrorKind::MalformedInput,
                path.string() + ": invalid UTF-8 at byte " + std::to_string(*bad));
  std::istringstream stream(content);
  return read_summary_lines(stream);
}

}  // namespace blogsum
