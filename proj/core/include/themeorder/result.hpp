#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "themeorder/model.hpp"
#include "themeorder/precedence_graph.hpp"

namespace themeorder {

/// First-publication time of a theme and the member sentence that witnesses it.
struct ThemeTimeStamp {
  std::string theme_id;
  PublicationTime time;
  SentenceRef stamp_sentence;

  bool operator==(const ThemeTimeStamp&) const = default;
};

struct Block {
  /// Member theme ids in chronological order.
  std::vector<std::string> themes;
  PublicationTime time;
  /// The member whose time stamp is the block's time stamp.
  std::string stamp_theme;

  bool operator==(const Block&) const = default;
};

/// Blocks of related themes, listed in output order.
struct BlockPartition {
  std::vector<Block> blocks;

  bool operator==(const BlockPartition&) const = default;
};

struct MajorityDiagnostics {
  PrecedenceGraph graph;
  std::uint64_t weight = 0;
};

struct ChronologicalDiagnostics {
  /// In output order.
  std::vector<ThemeTimeStamp> stamps;
};

struct AugmentedDiagnostics {
  BlockPartition partition;
  /// In output order.
  std::vector<ThemeTimeStamp> stamps;
};

struct OrderingResult {
  Strategy strategy = Strategy::chronological;
  /// A permutation of the corpus theme ids.
  std::vector<std::string> sequence;
  std::variant<MajorityDiagnostics, ChronologicalDiagnostics, AugmentedDiagnostics> diagnostics;
};

}  // namespace themeorder
