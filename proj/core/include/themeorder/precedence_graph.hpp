#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace themeorder {

/// Dense weighted digraph over themes. count(i, j) is the number of input
/// documents in which theme i is presented before theme j.
class PrecedenceGraph {
 public:
  PrecedenceGraph() = default;
  /// Throws ContractError on duplicate ids.
  explicit PrecedenceGraph(std::vector<std::string> theme_ids);

  std::size_t size() const noexcept { return ids_.size(); }
  const std::vector<std::string>& theme_ids() const noexcept { return ids_; }
  const std::string& theme_id(std::size_t i) const { return ids_.at(i); }
  /// Throws LookupError for unknown ids.
  std::size_t index_of(std::string_view theme_id) const;

  std::uint64_t count(std::size_t from, std::size_t to) const { return counts_[from * size() + to]; }
  /// Adds `n` observations of `from` preceding `to`. Self-loops are rejected.
  void add(std::size_t from, std::size_t to, std::uint64_t n = 1);

  /// Sum over unordered pairs of count(i,j) + count(j,i).
  std::uint64_t total_weight() const;

  bool operator==(const PrecedenceGraph&) const = default;

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::uint64_t> counts_;
};

}  // namespace themeorder
