#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "themeorder/model.hpp"
#include "themeorder/precedence_graph.hpp"
#include "themeorder/result.hpp"

namespace themeorder {

/// How greedy linearization picks among nodes of equal potential.
/// Without a seed the smallest theme id wins; with a seed the winner is drawn
/// uniformly from a std::mt19937_64 stream.
struct TieBreak {
  std::optional<std::uint64_t> seed;

  static TieBreak by_id() { return {}; }
  static TieBreak seeded(std::uint64_t s) { return {s}; }
};

/// Counts, for every ordered theme pair, the documents presenting the first
/// before the second. A theme's position in a document is the minimum
/// position of its members there.
PrecedenceGraph build_precedence_counts(const Corpus& corpus);

/// Sum of count(a, b) over all pairs with a before b in `sequence`.
/// Throws ContractError unless `sequence` is a permutation of node indices.
std::uint64_t order_weight(std::span<const std::size_t> sequence, const PrecedenceGraph& graph);
std::uint64_t order_weight(std::span<const std::string> sequence, const PrecedenceGraph& graph);

/// Greedy approximation of the maximum-weight linear order: repeatedly emit
/// the remaining node with the largest (outgoing - incoming) weight, then
/// drop it and all of its edges. Returns node indices.
std::vector<std::size_t> greedy_linearize(const PrecedenceGraph& graph, const TieBreak& tie_break = {});

inline constexpr std::size_t kDefaultBruteForceLimit = 8;

/// Exhaustive maximum-weight order. Among optimal orders, the one whose id
/// sequence is lexicographically smallest is returned.
/// Throws RangeError when the graph has more than `max_n` nodes.
std::pair<std::vector<std::size_t>, std::uint64_t> brute_force_optimal(
    const PrecedenceGraph& graph, std::size_t max_n = kDefaultBruteForceLimit);

/// build_precedence_counts followed by greedy_linearize.
OrderingResult majority_order(const Corpus& corpus, const TieBreak& tie_break = {});

/// Edge list "from to count", positive counts only, sorted by (from, to).
std::string dump_graph(const PrecedenceGraph& graph);

}  // namespace themeorder
