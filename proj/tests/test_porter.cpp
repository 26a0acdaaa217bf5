#include <gtest/gtest.h>

#include <string>

#include "blogsum/porter.hpp"
#include "test_support.hpp"

using blogsum::porter_stem;
namespace bt = blogsum::testing;

TEST(Porter, ReferenceTable) {
  const auto& pairs = bt::porter_reference();
  ASSERT_GE(pairs.size(), 1000u);
  std::size_t mismatches = 0;
  for (const auto& [word, expected] : pairs) {
    const auto got = porter_stem(word);
    if (got != expected && ++mismatches <= 20) ADD_FAILURE() << word << ": got " << got << ", want " << expected;
  }
  EXPECT_EQ(mismatches, 0u);
}

TEST(Porter, DocumentedExamples) {
  EXPECT_EQ(porter_stem("natural"), "natur");
  EXPECT_EQ(porter_stem("programming"), "program");
  EXPECT_EQ(porter_stem("oop"), "oop");
  EXPECT_EQ(porter_stem("oriented"), "orient");
  EXPECT_EQ(porter_stem("object"), "object");
  EXPECT_EQ(porter_stem("benefits"), "benefit");
  EXPECT_EQ(porter_stem("daily"), "daili");
  EXPECT_EQ(porter_stem("especially"), "especi");
}

TEST(Porter, ClassicStepExamples) {
  EXPECT_EQ(porter_stem("caresses"), "caress");
  EXPECT_EQ(porter_stem("ponies"), "poni");
  EXPECT_EQ(porter_stem("cats"), "cat");
  EXPECT_EQ(porter_stem("agreed"), "agre");
  EXPECT_EQ(porter_stem("hopping"), "hop");
  EXPECT_EQ(porter_stem("filing"), "file");
  EXPECT_EQ(porter_stem("relational"), "relat");
  EXPECT_EQ(porter_stem("generalization"), "gener");
  EXPECT_EQ(porter_stem("electricity"), "electr");
  EXPECT_EQ(porter_stem("adjustable"), "adjust");
  EXPECT_EQ(porter_stem("controlling"), "control");
  EXPECT_EQ(porter_stem("roll"), "roll");
}

TEST(Porter, ReferenceImplementationDepartures) {
  EXPECT_EQ(porter_stem("as"), "as");         // length <= 2 untouched
  EXPECT_EQ(porter_stem("is"), "is");
  EXPECT_EQ(porter_stem("possibly"), "possibl");  // bli -> ble, then step 4 keeps "possibl"
  EXPECT_EQ(porter_stem("analogi"), "analog");    // logi -> log
}

TEST(Porter, LeavesNonLowercaseAsciiAlone) {
  EXPECT_EQ(porter_stem(""), "");
  EXPECT_EQ(porter_stem("c++"), "c++");
  EXPECT_EQ(porter_stem("Running"), "Running");
  EXPECT_EQ(porter_stem("y2k"), "y2k");
  EXPECT_EQ(porter_stem("caf\xC3\xA9s"), "caf\xC3\xA9s");
}

TEST(Porter, IsDeterministicAcrossInstances) {
  blogsum::PorterStemmer a;
  blogsum::PorterStemmer b;
  for (const auto& [word, expected] : bt::porter_reference()) ASSERT_EQ(a(word), b(word));
}
