#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support/generators.hpp"
#include "themeorder/error.hpp"
#include "themeorder/model.hpp"

namespace themeorder {
namespace {

Document doc(std::string id, PublicationTime t, std::size_t sentences) {
  Document d{std::move(id), t, {}, {}};
  for (std::size_t i = 0; i < sentences; ++i) {
    d.sentences.push_back("s" + std::to_string(i));
    d.segments.push_back(0);
  }
  return d;
}

bool has_rule(const std::vector<Violation>& v, const std::string& rule) {
  return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.rule == rule; });
}

TEST(PublicationTime, OrderedByDateThenHourThenMinute) {
  EXPECT_LT((PublicationTime{2001, 10, 5, 10, 20}), (PublicationTime{2001, 10, 5, 11, 35}));
  EXPECT_LT((PublicationTime{2001, 10, 5, 23, 59}), (PublicationTime{2001, 10, 6, 6, 13}));
  EXPECT_LT((PublicationTime{2000, 12, 31, 23, 59}), (PublicationTime{2001, 1, 1, 0, 0}));
  EXPECT_EQ((PublicationTime{2001, 10, 5, 10, 20}).to_iso(), "2001-10-05T10:20");
}

TEST(PublicationTime, Validity) {
  EXPECT_TRUE((PublicationTime{2000, 2, 29, 0, 0}).is_valid());
  EXPECT_FALSE((PublicationTime{2001, 2, 29, 0, 0}).is_valid());
  EXPECT_FALSE((PublicationTime{2001, 1, 1, 24, 0}).is_valid());
  EXPECT_FALSE((PublicationTime{2001, 1, 1, 0, 60}).is_valid());
  EXPECT_FALSE((PublicationTime{2001, 13, 1, 0, 0}).is_valid());
}

TEST(ValidateCorpus, MinimalCorpusIsClean) {
  Corpus c;
  c.documents.push_back(doc("d1", {2001, 10, 5, 10, 20}, 1));
  c.themes.push_back({"T1", {{"d1", 0}}});
  EXPECT_TRUE(validate_corpus(c).empty());
}

TEST(ValidateCorpus, DuplicatePublicationTimeNamesBothDocuments) {
  Corpus c;
  c.documents.push_back(doc("d1", {2001, 10, 5, 10, 20}, 1));
  c.documents.push_back(doc("d2", {2001, 10, 5, 10, 20}, 1));
  c.themes.push_back({"T1", {{"d1", 0}}});
  const auto v = validate_corpus(c);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].rule, "duplicate-time");
  EXPECT_NE(v[0].entity.find("d1"), std::string::npos);
  EXPECT_NE(v[0].entity.find("d2"), std::string::npos);
}

TEST(ValidateCorpus, OutOfRangePosition) {
  Corpus c;
  c.documents.push_back(doc("d1", {2001, 10, 5, 10, 20}, 3));
  c.themes.push_back({"T1", {{"d1", 5}}});
  const auto v = validate_corpus(c);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].rule, "position-out-of-range");
  EXPECT_EQ(v[0].entity, "theme T1");
}

TEST(ValidateCorpus, ReportsEveryKindOfViolation) {
  Corpus c;
  c.documents.push_back(doc("d1", {2001, 10, 5, 10, 20}, 2));
  c.documents.push_back(doc("d1", {2001, 10, 6, 10, 20}, 0));
  c.documents.push_back(doc("d3", {2001, 10, 7, 10, 20}, 3));
  c.documents[2].segments = {0, 2, 2};
  auto d4 = doc("d4", {2001, 10, 8, 10, 20}, 2);
  d4.segments = {1, 1};
  c.documents.push_back(d4);
  auto d5 = doc("d5", {2001, 10, 9, 10, 20}, 2);
  d5.segments = {0};
  c.documents.push_back(d5);
  c.themes.push_back({"T1", {}});
  c.themes.push_back({"T1", {{"nope", 0}}});
  c.themes.push_back({"T2", {{"d3", 1}, {"d3", 1}}});

  const auto v = validate_corpus(c);
  for (const char* rule : {"duplicate-id", "no-sentences", "segment-order", "segment-start", "segment-count",
                           "no-members", "unknown-document", "duplicate-member"}) {
    EXPECT_TRUE(has_rule(v, rule)) << rule;
  }
}

TEST(ValidateCorpus, MultipleMembersFromOneDocumentAreAllowed) {
  Corpus c;
  c.documents.push_back(doc("d1", {2001, 10, 5, 10, 20}, 3));
  c.themes.push_back({"T1", {{"d1", 0}, {"d1", 2}}});
  EXPECT_TRUE(validate_corpus(c).empty());
}

TEST(ValidateCorpus, IsPureAndAcceptsGeneratedCorpora) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const Corpus c = testing::random_corpus(rng);
    const auto first = validate_corpus(c);
    EXPECT_TRUE(first.empty());
    EXPECT_EQ(first, validate_corpus(c));
  }
}

TEST(DocumentIndex, LooksUpById) {
  Corpus c;
  c.documents.push_back(doc("a", {2001, 1, 1, 0, 0}, 1));
  c.documents.push_back(doc("b", {2001, 1, 1, 0, 1}, 2));
  const DocumentIndex index(c);
  EXPECT_EQ(index.index_of("b"), 1u);
  EXPECT_EQ(index.document("b").sentences.size(), 2u);
  EXPECT_TRUE(index.contains("a"));
  EXPECT_THROW(index.index_of("zz"), Error);
}

}  // namespace
}  // namespace themeorder
