#include <gtest/gtest.h>

#include <random>

#include "support/generators.hpp"
#include "themeorder/corpus_io.hpp"
#include "themeorder/error.hpp"

namespace themeorder {
namespace {

const char* kMinimal = R"({
  "documents": [
    {"id": "d1", "published": "2001-10-05T10:20", "sentences": ["Only sentence."], "segments": [0]}
  ],
  "themes": [
    {"id": "T1", "members": [{"doc": "d1", "pos": 0}]}
  ]
})";

std::string grader_orderings() { return read_file(THEMEORDER_DATA_DIR "/grader_orderings.txt"); }

TEST(ParseCorpus, Minimal) {
  const Corpus c = parse_corpus(kMinimal);
  ASSERT_EQ(c.documents.size(), 1u);
  ASSERT_EQ(c.themes.size(), 1u);
  EXPECT_EQ(c.documents[0].published, (PublicationTime{2001, 10, 5, 10, 20}));
  EXPECT_EQ(c.themes[0].members[0], (SentenceRef{"d1", 0}));
}

TEST(ParseCorpus, DuplicateThemeIdIsAValidationError) {
  const std::string text = R"({"documents": [{"id": "d1", "published": "2001-10-05T10:20",
      "sentences": ["a", "b"], "segments": [0, 0]}],
    "themes": [{"id": "T1", "members": [{"doc": "d1", "pos": 0}]},
               {"id": "T1", "members": [{"doc": "d1", "pos": 1}]}]})";
  try {
    parse_corpus(text);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    ASSERT_EQ(e.violations().size(), 1u);
    EXPECT_NE(e.violations()[0].find("T1"), std::string::npos);
  }
}

TEST(ParseCorpus, SyntaxErrorCarriesLine) {
  const std::string text = "{\n  \"documents\": [\n    {\"id\": \"d1\",,}\n  ]\n}";
  try {
    parse_corpus(text);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.location(), "line 3");
  }
}

TEST(ParseCorpus, FieldErrorsCarryJsonPointer) {
  auto location_of = [](const std::string& text) {
    try {
      parse_corpus(text);
    } catch (const ParseError& e) {
      return e.location();
    }
    return std::string("<no error>");
  };
  EXPECT_EQ(location_of(R"({"themes": []})"), "/documents");
  EXPECT_EQ(location_of(R"({"documents": [{"id": 3}], "themes": []})"), "/documents/0/id");
  EXPECT_EQ(location_of(R"({"documents": [{"id": "d", "published": "Oct 5", "sentences": [], "segments": []}],
                            "themes": []})"),
            "/documents/0/published");
  EXPECT_EQ(location_of(R"({"documents": [], "themes": [{"id": "T", "members": [{"doc": "d", "pos": -1}]}]})"),
            "/themes/0/members/0/pos");
}

TEST(ParseCorpus, SecondsAreTruncatedWithAWarning) {
  std::string text = kMinimal;
  text.replace(text.find("10:20"), 5, "10:20:59");
  std::vector<std::string> warnings;
  const Corpus c = parse_corpus(text, &warnings);
  EXPECT_EQ(c.documents[0].published, (PublicationTime{2001, 10, 5, 10, 20}));
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("truncated"), std::string::npos);
}

TEST(ParseCorpus, RejectsTimezones) {
  EXPECT_THROW(parse_publication_time("2001-10-05T10:20Z"), ParseError);
  EXPECT_THROW(parse_publication_time("2001-10-05T10:20+02:00"), ParseError);
  EXPECT_THROW(parse_publication_time("2001-02-30T10:20"), ParseError);
}

TEST(ParseCorpus, MissingSegmentsOnlyWhenAllowed) {
  const std::string text = R"({"documents": [{"id": "d1", "published": "2001-10-05T10:20",
      "sentences": ["a"]}], "themes": []})";
  EXPECT_THROW(parse_corpus(text), ParseError);
  CorpusParseOptions opts;
  opts.allow_missing_segments = true;
  opts.validate = false;
  EXPECT_TRUE(parse_corpus(text, nullptr, opts).documents[0].segments.empty());
}

TEST(ParseCorpus, RoundTripOnRandomCorpora) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const Corpus c = testing::random_corpus(rng);
    const std::string once = serialize_corpus(c);
    EXPECT_EQ(parse_corpus(once), c);
    EXPECT_EQ(serialize_corpus(parse_corpus(once)), once);
  }
}

TEST(ParseOrderingSet, GraderFixture) {
  const OrderingSet set = parse_ordering_set(grader_orderings());
  EXPECT_EQ(set.labels, (std::vector<std::string>{"A", "B", "C", "D", "E", "F", "G", "H", "I", "J"}));
  ASSERT_EQ(set.orderings.size(), 10u);
  EXPECT_EQ(set.orderings[0], (std::vector<std::string>{"D", "B", "G", "I", "H", "F", "C", "J", "A", "E"}));
  EXPECT_EQ(set.orderings[9], (std::vector<std::string>{"D", "B", "G", "I", "C", "F", "A", "J", "E", "H"}));
}

TEST(ParseOrderingSet, SingleRow) {
  const OrderingSet set = parse_ordering_set("A B\nA B\n");
  EXPECT_EQ(set.orderings.size(), 1u);
}

TEST(ParseOrderingSet, ErrorsNameTheRowAndLabel) {
  auto message = [](const std::string& text) {
    try {
      parse_ordering_set(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("<no error>");
  };
  EXPECT_EQ(message("A B\nA A B\n"), "line 2: ordering 1: duplicate label 'A'");
  EXPECT_NE(message("A B C\nA A B\n").find("duplicate label 'A'"), std::string::npos);
  EXPECT_NE(message("A B C\nA A B\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("A B C\nA B C\n\nA B\n").find("line 4: ordering 2: missing label 'C'"), std::string::npos);
  EXPECT_NE(message("A B\nA X\n").find("unknown label 'X'"), std::string::npos);
  EXPECT_NE(message("A A\nA A\n").find("duplicate label 'A' in inventory"), std::string::npos);
  EXPECT_NE(message("A B\n").find("no orderings"), std::string::npos);
  EXPECT_NE(message("\n\n").find("missing label inventory"), std::string::npos);
}

TEST(ParseOrderingSet, RoundTripOnRandomSets) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const OrderingSet set = testing::random_ordering_set(rng, 1 + i % 12, 1 + i % 7);
    EXPECT_EQ(parse_ordering_set(serialize_ordering_set(set)), set);
  }
}

}  // namespace
}  // namespace themeorder
