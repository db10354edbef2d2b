#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "themeorder/corpus_io.hpp"
#include "themeorder/rational.hpp"

namespace themeorder {

/// Mean absolute position difference of two labels over all orderings.
/// Throws LookupError for unknown labels.
Rational pair_distance(std::string_view a, std::string_view b, const OrderingSet& set);

class DistanceMatrix {
 public:
  DistanceMatrix(std::vector<std::string> labels, std::vector<Rational> values);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const Rational& at(std::size_t i, std::size_t j) const { return values_[i * size() + j]; }
  const Rational& at(std::string_view a, std::string_view b) const;
  std::size_t index_of(std::string_view label) const;

  /// Header row of labels, then one row per label.
  std::string to_tsv() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Rational> values_;
};

DistanceMatrix distance_matrix(const OrderingSet& set);

enum class Linkage { ward, average, single, complete };

Linkage parse_linkage(std::string_view name);
std::string_view to_string(Linkage linkage);

struct ClusterCount {
  std::size_t k;
};
/// Keep merging while the closest clusters are at most this far apart.
struct DistanceCutoff {
  double max_distance;
};
using ClusterStop = std::variant<ClusterCount, DistanceCutoff>;

/// Label blocks; labels inside a block and the blocks themselves follow the
/// matrix's label order.
using LabelPartition = std::vector<std::vector<std::string>>;

/// Agglomerative clustering. Ward merges the pair with the smallest
/// Lance-Williams Ward distance; the others use the usual linkage rules.
/// Equal-distance candidates are resolved toward the pair whose smallest
/// member label is lexicographically smallest. Throws RangeError for k
/// outside [1, label count].
LabelPartition cluster_blocks(const DistanceMatrix& matrix, const ClusterStop& stop,
                              Linkage linkage = Linkage::ward);

std::size_t count_unique_orderings(const OrderingSet& set);

/// Number of discordant label pairs. Throws ContractError when the two
/// sequences are not permutations of the same labels.
std::size_t kendall_tau_distance(const std::vector<std::string>& first,
                                 const std::vector<std::string>& second);

}  // namespace themeorder
