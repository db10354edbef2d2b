#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "themeorder/analysis.hpp"
#include "themeorder/error.hpp"

namespace themeorder {
namespace {

OrderingSet grader_orderings() { return parse_ordering_set(read_file(THEMEORDER_DATA_DIR "/grader_orderings.txt")); }

std::set<std::set<std::string>> as_sets(const LabelPartition& p) {
  std::set<std::set<std::string>> out;
  for (const auto& b : p) out.emplace(b.begin(), b.end());
  return out;
}

TEST(PairDistance, GraderOrderingsDG) {
  // Per-row gaps 2+1+3+3+1+1+2+4+1+2 = 20 over 10 rows.
  EXPECT_EQ(pair_distance("D", "G", grader_orderings()), Rational(2));
}

TEST(PairDistance, Basics) {
  const auto set = grader_orderings();
  EXPECT_EQ(pair_distance("A", "A", set), Rational(0));
  EXPECT_EQ(pair_distance("A", "B", parse_ordering_set("A B C\nA B C\nC B A\n")), Rational(1));
  EXPECT_THROW(pair_distance("A", "Z", set), LookupError);
}

TEST(DistanceMatrix, TwoItems) {
  const auto m = distance_matrix(parse_ordering_set("A B\nA B\nB A\n"));
  EXPECT_EQ(m.at("A", "B"), Rational(1));
  EXPECT_EQ(m.at("A", "A"), Rational(0));
}

TEST(DistanceMatrix, GraderOrderings) {
  const auto m = distance_matrix(grader_orderings());
  EXPECT_EQ(m.size(), 10u);
  EXPECT_EQ(m.at("D", "G"), Rational(2));
  EXPECT_EQ(m.at("A", "J"), Rational(1));
  EXPECT_EQ(m.at("A", "D"), Rational(73, 10));
}

TEST(DistanceMatrix, SymmetricZeroDiagonalAtLeastOne) {
  std::mt19937_64 rng(83);
  for (int i = 0; i < 100; ++i) {
    const auto set = testing::random_ordering_set(rng, 1 + i % 10, 1 + i % 6);
    const auto m = distance_matrix(set);
    for (std::size_t a = 0; a < m.size(); ++a) {
      EXPECT_EQ(m.at(a, a), Rational(0));
      for (std::size_t b = 0; b < m.size(); ++b) {
        EXPECT_EQ(m.at(a, b), m.at(b, a));
        if (a != b) EXPECT_GE(m.at(a, b), Rational(1));
        EXPECT_EQ(m.at(a, b), pair_distance(set.labels[a], set.labels[b], set));
      }
    }
  }
}

TEST(DistanceMatrix, Tsv) {
  const auto m = distance_matrix(parse_ordering_set("A B C\nA B C\nC A B\n"));
  EXPECT_EQ(m.to_tsv(), "\tA\tB\tC\nA\t0\t1\t1.5\nB\t1\t0\t1.5\nC\t1.5\t1.5\t0\n");
}

TEST(ClusterBlocks, GraderOrderingsFormFourBlocks) {
  const auto blocks = cluster_blocks(distance_matrix(grader_orderings()), ClusterCount{4});
  EXPECT_EQ(as_sets(blocks), (std::set<std::set<std::string>>{{"B", "D", "G", "I"}, {"A", "J"}, {"C", "F"}, {"E", "H"}}));
  EXPECT_EQ(blocks.front(), (std::vector<std::string>{"A", "J"}));
}

TEST(ClusterBlocks, AverageLinkageMergesGraderOrderingsDifferently) {
  // Average linkage joins {A,J} with {E,H} (2.2) before D reaches {B,G,I} (7/3).
  const auto blocks = cluster_blocks(distance_matrix(grader_orderings()), ClusterCount{4}, Linkage::average);
  EXPECT_EQ(as_sets(blocks), (std::set<std::set<std::string>>{{"A", "E", "H", "J"}, {"B", "G", "I"}, {"C", "F"}, {"D"}}));
}

TEST(ClusterBlocks, ExtremeCounts) {
  const auto m = distance_matrix(grader_orderings());
  for (Linkage l : {Linkage::ward, Linkage::average, Linkage::single, Linkage::complete}) {
    EXPECT_EQ(cluster_blocks(m, ClusterCount{10}, l).size(), 10u);
    const auto one = cluster_blocks(m, ClusterCount{1}, l);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0], m.labels());
  }
  EXPECT_THROW(cluster_blocks(m, ClusterCount{0}), RangeError);
  EXPECT_THROW(cluster_blocks(m, ClusterCount{11}), RangeError);
}

TEST(ClusterBlocks, DistanceCutoff) {
  const auto m = distance_matrix(grader_orderings());
  EXPECT_EQ(cluster_blocks(m, DistanceCutoff{0.5}).size(), 10u);
  // Only A-J (distance 1) merges at cutoff 1.
  const auto p = cluster_blocks(m, DistanceCutoff{1.0}, Linkage::average);
  EXPECT_EQ(p.size(), 9u);
  EXPECT_EQ(p.front(), (std::vector<std::string>{"A", "J"}));
  EXPECT_EQ(cluster_blocks(m, DistanceCutoff{1e9}).size(), 1u);
}

TEST(ClusterBlocks, TiesResolveTowardSmallestLabel) {
  // All pairwise distances equal: the first merge takes A and B.
  const auto m = distance_matrix(parse_ordering_set("A B C\nA B C\nB C A\nC A B\n"));
  ASSERT_EQ(m.at("A", "B"), m.at("B", "C"));
  ASSERT_EQ(m.at("A", "B"), m.at("A", "C"));
  EXPECT_EQ(cluster_blocks(m, ClusterCount{2}, Linkage::average),
            (LabelPartition{{"A", "B"}, {"C"}}));
}

TEST(ClusterBlocks, ExactlyKCoveringBlocks) {
  std::mt19937_64 rng(89);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + i % 12;
    const auto m = distance_matrix(testing::random_ordering_set(rng, n, 1 + i % 5));
    const std::size_t k = 1 + (static_cast<std::size_t>(i) * 7) % n;
    for (Linkage l : {Linkage::ward, Linkage::average, Linkage::single, Linkage::complete}) {
      const auto p = cluster_blocks(m, ClusterCount{k}, l);
      ASSERT_EQ(p.size(), k);
      std::multiset<std::string> covered;
      for (const auto& b : p) {
        EXPECT_FALSE(b.empty());
        covered.insert(b.begin(), b.end());
      }
      EXPECT_EQ(covered, std::multiset<std::string>(m.labels().begin(), m.labels().end()));
    }
  }
}

TEST(ClusterBlocks, LinkageNames) {
  EXPECT_EQ(parse_linkage("ward"), Linkage::ward);
  EXPECT_EQ(to_string(parse_linkage("complete")), "complete");
  EXPECT_THROW(parse_linkage("centroid"), LookupError);
}

TEST(CountUniqueOrderings, Examples) {
  EXPECT_EQ(count_unique_orderings(parse_ordering_set("A B C\nA B C\nA B C\nA B C\n")), 1u);
  EXPECT_EQ(count_unique_orderings(parse_ordering_set("A B C\nA B C\nB A C\nC B A\n")), 3u);
  EXPECT_EQ(count_unique_orderings(grader_orderings()), 10u);
}

TEST(CountUniqueOrderings, MatchesPairwiseOracle) {
  std::mt19937_64 rng(97);
  for (int i = 0; i < 100; ++i) {
    // Few labels, many rows, so duplicates are common.
    const auto set = testing::random_ordering_set(rng, 1 + i % 4, 1 + i % 20);
    EXPECT_EQ(count_unique_orderings(set), testing::distinct_rows(set));
  }
}

TEST(KendallTau, Examples) {
  const std::vector<std::string> x{"A", "B", "C", "D", "E"};
  auto rev = x;
  std::reverse(rev.begin(), rev.end());
  EXPECT_EQ(kendall_tau_distance(x, x), 0u);
  EXPECT_EQ(kendall_tau_distance(x, rev), 10u);
  EXPECT_THROW(kendall_tau_distance(x, {"A", "B"}), ContractError);
  EXPECT_THROW(kendall_tau_distance(x, {"A", "B", "C", "D", "Z"}), ContractError);
  EXPECT_THROW(kendall_tau_distance(x, {"A", "B", "C", "D", "D"}), ContractError);
}

TEST(KendallTau, MatchesBruteForceAndIsAMetric) {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 100; ++i) {
    const auto set = testing::random_ordering_set(rng, 1 + i % 15, 3);
    const auto& [x, y, z] = std::tie(set.orderings[0], set.orderings[1], set.orderings[2]);
    EXPECT_EQ(kendall_tau_distance(x, y), testing::discordant_pairs(x, y));
    EXPECT_EQ(kendall_tau_distance(x, y), kendall_tau_distance(y, x));
    EXPECT_LE(kendall_tau_distance(x, z), kendall_tau_distance(x, y) + kendall_tau_distance(y, z));
  }
}

}  // namespace
}  // namespace themeorder
