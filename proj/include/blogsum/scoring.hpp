#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "blogsum/error.hpp"
#include "blogsum/grid.hpp"
#include "blogsum/ingestion.hpp"
#include "blogsum/linguistic.hpp"
#include "blogsum/rational.hpp"

namespace blogsum {

/// Rows are title terms, columns are sentences; entry (i, j) is how often
/// title term i occurs in sentence j (column j holds sentence index j + 1).
struct TitleSentenceMatrix {
  TitleTermset row_terms;
  Grid<std::uint32_t> entries;

  std::size_t n_terms() const noexcept { return entries.rows(); }
  std::size_t n_sentences() const noexcept { return entries.cols(); }
};

/// 1 where the title term is present in the sentence, 0 where it is absent.
struct PresenceFactorMatrix {
  Grid<std::uint8_t> entries;

  std::size_t n_terms() const noexcept { return entries.rows(); }
  std::size_t n_sentences() const noexcept { return entries.cols(); }
};

inline TitleSentenceMatrix build_tsm(const TitleTermset& termset,
                                     const std::vector<SentenceTerms>& sentence_terms) {
  if (termset.empty()) throw Error(ErrorKind::EmptyTermset, "title termset is empty");
  if (sentence_terms.empty()) throw Error(ErrorKind::NoSentences, "document has no sentences");
  for (std::size_t j = 0; j < sentence_terms.size(); ++j)
    if (sentence_terms[j].sentence_index != j + 1)
      throw Error(ErrorKind::IndexOutOfRange, "sentence indices must run 1..n in order");

  TitleSentenceMatrix tsm{termset, Grid<std::uint32_t>(termset.size(), sentence_terms.size())};
  for (std::size_t j = 0; j < sentence_terms.size(); ++j)
    for (std::size_t i = 0; i < termset.size(); ++i)
      tsm.entries(i, j) = static_cast<std::uint32_t>(sentence_terms[j].count(termset[i]));
  return tsm;
}

inline PresenceFactorMatrix build_pfm(const TitleSentenceMatrix& tsm) {
  return {tsm.entries.map([](std::uint32_t c) -> std::uint8_t { return c >= 1 ? 1 : 0; })};
}

enum class ScoreVariant {
  Literal,   // sum over title terms of TSM * PFM
  Coverage,  // literal score scaled by (distinct title terms present) / m
};

inline std::string_view to_string(ScoreVariant v) {
  return v == ScoreVariant::Literal ? "literal" : "coverage";
}

inline std::size_t distinct_hits(const PresenceFactorMatrix& pfm, std::size_t j) {
  std::size_t hits = 0;
  for (std::size_t i = 0; i < pfm.n_terms(); ++i) hits += pfm.entries(i, j - 1);
  return hits;
}

/// Sentence score for the 1-based sentence `j`. Literal scores are integers;
/// coverage scores are exact fractions.
inline Rational sentence_score(const TitleSentenceMatrix& tsm, const PresenceFactorMatrix& pfm,
                               std::size_t j, ScoreVariant variant = ScoreVariant::Literal) {
  if (tsm.n_terms() != pfm.n_terms() || tsm.n_sentences() != pfm.n_sentences())
    throw Error(ErrorKind::IndexOutOfRange, "TSM and PFM dimensions differ");
  if (j < 1 || j > tsm.n_sentences())
    throw Error(ErrorKind::IndexOutOfRange,
                "sentence " + std::to_string(j) + " outside 1.." + std::to_string(tsm.n_sentences()));
  std::uint64_t literal = 0;
  for (std::size_t i = 0; i < tsm.n_terms(); ++i)
    literal += std::uint64_t{tsm.entries(i, j - 1)} * pfm.entries(i, j - 1);
  if (variant == ScoreVariant::Literal) return Rational(literal);
  return Rational(literal) * Rational(distinct_hits(pfm, j), tsm.n_terms());
}

struct ScoredSentence {
  Sentence sentence;
  Rational score;
  std::size_t distinct_hits = 0;
};

inline std::vector<ScoredSentence> score_sentences(const SentenceSet& sentences,
                                                   const TitleSentenceMatrix& tsm,
                                                   const PresenceFactorMatrix& pfm,
                                                   ScoreVariant variant = ScoreVariant::Literal) {
  if (sentences.size() != tsm.n_sentences())
    throw Error(ErrorKind::IndexOutOfRange, "sentence count does not match the matrices");
  std::vector<ScoredSentence> out;
  out.reserve(sentences.size());
  for (const auto& s : sentences)
    out.push_back({s, sentence_score(tsm, pfm, s.index, variant), distinct_hits(pfm, s.index)});
  return out;
}

/// Highest score first; equal scores keep ascending sentence index.
inline std::vector<ScoredSentence> rank_sentences(std::vector<ScoredSentence> scores) {
  std::stable_sort(scores.begin(), scores.end(), [](const ScoredSentence& a, const ScoredSentence& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.sentence.index < b.sentence.index;
  });
  return scores;
}

enum class Ordering { Score, Document };

inline std::string_view to_string(Ordering o) { return o == Ordering::Score ? "score" : "document"; }

struct TopK {
  std::size_t k;
};
struct TopRatio {
  double ratio;
};
using SummaryLength = std::variant<TopK, TopRatio>;

inline constexpr double kDefaultRatio = 0.2;

/// k for a document with `n` sentences; ratios round up so at least one
/// sentence is requested.
inline std::size_t resolve_k(const SummaryLength& length, std::size_t n) {
  if (const auto* k = std::get_if<TopK>(&length)) {
    if (k->k < 1) throw Error(ErrorKind::InvalidK, "k must be at least 1");
    return k->k;
  }
  const double ratio = std::get<TopRatio>(length).ratio;
  if (!(ratio > 0.0 && ratio <= 1.0))
    throw Error(ErrorKind::InvalidK, "ratio must be in (0, 1], got " + std::to_string(ratio));
  // The epsilon absorbs representation error such as 0.2 * 35 = 7.000000000000001.
  return static_cast<std::size_t>(std::ceil(ratio * static_cast<double>(n) - 1e-9));
}

struct RankedSummary {
  std::vector<ScoredSentence> selected;
  std::size_t k = 0;
  Ordering ordering = Ordering::Score;
};

/// Takes the top min(k, n) ranked sentences. Zero-score sentences are dropped
/// unless `include_zero` is set, so the summary may be shorter than k.
inline RankedSummary select_summary(const std::vector<ScoredSentence>& ranked,
                                    const SummaryLength& length, Ordering ordering = Ordering::Score,
                                    bool include_zero = false) {
  RankedSummary summary;
  summary.k = resolve_k(length, ranked.size());
  summary.ordering = ordering;
  for (const auto& s : ranked) {
    if (summary.selected.size() >= summary.k) break;
    if (!include_zero && s.score == Rational(0)) continue;
    summary.selected.push_back(s);
  }
  if (ordering == Ordering::Document) {
    std::sort(summary.selected.begin(), summary.selected.end(),
              [](const ScoredSentence& a, const ScoredSentence& b) {
                return a.sentence.index < b.sentence.index;
              });
  }
  return summary;
}

/// Tab-separated dump of both matrices. Each grid is introduced by "# TSM" or
/// "# PFM"; its header row lists sentence indices and each following row
/// starts with the title term.
inline std::string dump_matrices(const TitleSentenceMatrix& tsm, const PresenceFactorMatrix& pfm) {
  std::string out;
  auto grid = [&](std::string_view name, auto&& cell) {
    out += "# ";
    out += name;
    out += "\nterm";
    for (std::size_t j = 1; j <= tsm.n_sentences(); ++j) out += "\t" + std::to_string(j);
    out += '\n';
    for (std::size_t i = 0; i < tsm.n_terms(); ++i) {
      out += tsm.row_terms[i].str();
      for (std::size_t j = 0; j < tsm.n_sentences(); ++j) out += "\t" + std::to_string(cell(i, j));
      out += '\n';
    }
  };
  grid("TSM", [&](std::size_t i, std::size_t j) { return unsigned{tsm.entries(i, j)}; });
  grid("PFM", [&](std::size_t i, std::size_t j) { return unsigned{pfm.entries(i, j)}; });
  return out;
}

}  // namespace blogsum
