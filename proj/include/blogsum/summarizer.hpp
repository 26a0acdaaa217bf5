#pragma once

#include <string_view>
#include <vector>

#include "blogsum/ingestion.hpp"
#include "blogsum/linguistic.hpp"
#include "blogsum/scoring.hpp"

namespace blogsum {

struct SummaryOptions {
  PipelineConfig pipeline;
  SegmenterConfig segmenter;
  SummaryLength length = TopRatio{kDefaultRatio};
  ScoreVariant variant = ScoreVariant::Literal;
  Ordering ordering = Ordering::Score;
  bool include_zero = false;
};

/// Every intermediate of the title-driven scoring for one document.
struct DocumentAnalysis {
  SentenceSet sentences;
  TitleTermset title_terms;
  std::vector<SentenceTerms> sentence_terms;
  TitleSentenceMatrix tsm;
  PresenceFactorMatrix pfm;
  std::vector<ScoredSentence> ranked;
};

inline DocumentAnalysis analyze(const BlogDocument& doc, const SummaryOptions& options) {
  DocumentAnalysis a;
  a.title_terms = build_title_termset(doc.title, options.pipeline);
  a.sentences = segment_sentences(doc.body, options.segmenter);
  a.sentence_terms.reserve(a.sentences.size());
  for (const auto& s : a.sentences) a.sentence_terms.push_back(process_sentence(s, options.pipeline));
  a.tsm = build_tsm(a.title_terms, a.sentence_terms);
  a.pfm = build_pfm(a.tsm);
  a.ranked = rank_sentences(score_sentences(a.sentences, a.tsm, a.pfm, options.variant));
  return a;
}

inline RankedSummary summarize(const DocumentAnalysis& analysis, const SummaryOptions& options) {
  return select_summary(analysis.ranked, options.length, options.ordering, options.include_zero);
}

inline RankedSummary summarize(const BlogDocument& doc, const SummaryOptions& options = {}) {
  return summarize(analyze(doc, options), options);
}

}  // namespace blogsum
