#include <gtest/gtest.h>

#include <random>

#include "properties.hpp"

namespace bt = blogsum::testing;

namespace {

void expect_ok(const bt::CheckResult& r) {
  EXPECT_GT(r.cases, 0u);
  EXPECT_EQ(r.failures, 0u) << r.first_failure;
}

}  // namespace

TEST(Properties, LiteralScoreMatchesBruteForce) {
  std::mt19937_64 rng(11);
  expect_ok(bt::check_literal_scores(rng, 300));
}

TEST(Properties, PresenceMatrixIsIndicatorOfCounts) {
  std::mt19937_64 rng(12);
  expect_ok(bt::check_pfm_consistency(rng, 300));
}

TEST(Properties, TieBreakIsDeterministic) {
  std::mt19937_64 rng(13);
  expect_ok(bt::check_tie_break(rng, 300));
}

TEST(Properties, TitleTermOrderDoesNotMatter) {
  std::mt19937_64 rng(14);
  expect_ok(bt::check_permutation_safety(rng, 300));
}

TEST(Properties, AddedTitleTermRaisesScore) {
  std::mt19937_64 rng(15);
  expect_ok(bt::check_monotonicity(rng, 300));
}

TEST(Properties, SummarySentencesAreVerbatim) {
  std::mt19937_64 rng(16);
  expect_ok(bt::check_summary_verbatim(rng, 300));
}

TEST(Properties, EvaluationIsSymmetric) {
  std::mt19937_64 rng(17);
  expect_ok(bt::check_evaluation_symmetry(rng, 300));
}

TEST(Properties, GeneratedSegmentationIsExact) {
  std::mt19937_64 rng(18);
  for (int c = 0; c < 200; ++c) {
    const auto gen = bt::random_document(rng);
    const auto set = blogsum::segment_sentences(gen.body);
    ASSERT_EQ(set.size(), gen.sentences.size()) << gen.body;
    for (std::size_t i = 0; i < set.size(); ++i) EXPECT_EQ(set[i].raw_text, gen.sentences[i]);
  }
}
