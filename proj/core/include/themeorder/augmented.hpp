#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "themeorder/model.hpp"
#include "themeorder/rational.hpp"
#include "themeorder/result.hpp"

namespace themeorder {

/// Segment co-occurrence evidence for one unordered theme pair.
struct RelatednessScore {
  std::string first;
  std::string second;
  /// Member pairs (a, b) lying in the same document.
  std::uint64_t pairs_same_text = 0;
  /// Those of the above that also share a segment.
  std::uint64_t pairs_same_segment = 0;
  /// pairs_same_segment / pairs_same_text, or 0 when no pair shares a document.
  Rational ratio{0};
};

struct RelatednessThreshold {
  Rational value{3, 5};
  /// Related when ratio >= value instead of ratio > value.
  bool inclusive = false;

  bool admits(const Rational& ratio) const { return inclusive ? ratio >= value : ratio > value; }
};

/// Returns (#AB, #AB+).
std::pair<std::uint64_t, std::uint64_t> cooccurrence_counts(const Theme& a, const Theme& b,
                                                            const Corpus& corpus);

RelatednessScore relatedness(const Theme& a, const Theme& b, const Corpus& corpus);

/// Connected components of the "ratio above threshold" relation, each with
/// the earliest member time stamp. Blocks are listed in augmented output order.
BlockPartition build_blocks(const Corpus& corpus, const RelatednessThreshold& threshold = {});

/// Chronological ordering of blocks, then of themes inside each block.
OrderingResult augmented_order(const Corpus& corpus, const RelatednessThreshold& threshold = {});

/// "block_k ISO-time: theme theme ...", one line per block, k from 1.
std::string dump_blocks(const BlockPartition& partition);

}  // namespace themeorder
