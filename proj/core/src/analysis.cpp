#include "themeorder/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "themeorder/error.hpp"

namespace themeorder {

namespace {

std::size_t label_index(const std::vector<std::string>& labels, std::string_view label) {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw LookupError("unknown label '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

// positions[r][i]: position of label i in ordering r.
std::vector<std::vector<std::int64_t>> label_positions(const OrderingSet& set) {
  std::map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < set.labels.size(); ++i) index.emplace(set.labels[i], i);
  std::vector<std::vector<std::int64_t>> pos(set.orderings.size(), std::vector<std::int64_t>(set.labels.size(), 0));
  for (std::size_t r = 0; r < set.orderings.size(); ++r) {
    for (std::size_t p = 0; p < set.orderings[r].size(); ++p) {
      pos[r][index.at(set.orderings[r][p])] = static_cast<std::int64_t>(p);
    }
  }
  return pos;
}

Rational mean_gap(const std::vector<std::vector<std::int64_t>>& pos, std::size_t i, std::size_t j) {
  std::int64_t sum = 0;
  for (const auto& row : pos) sum += std::abs(row[i] - row[j]);
  return Rational(sum, static_cast<std::int64_t>(pos.size()));
}

}  // namespace

Rational pair_distance(std::string_view a, std::string_view b, const OrderingSet& set) {
  const std::size_t i = label_index(set.labels, a);
  const std::size_t j = label_index(set.labels, b);
  if (set.orderings.empty()) throw ContractError("ordering set is empty");
  return mean_gap(label_positions(set), i, j);
}

DistanceMatrix::DistanceMatrix(std::vector<std::string> labels, std::vector<Rational> values)
    : labels_(std::move(labels)), values_(std::move(values)) {
  if (values_.size() != labels_.size() * labels_.size()) throw ContractError("distance matrix shape mismatch");
}

std::size_t DistanceMatrix::index_of(std::string_view label) const { return label_index(labels_, label); }

const Rational& DistanceMatrix::at(std::string_view a, std::string_view b) const {
  return at(index_of(a), index_of(b));
}

std::string DistanceMatrix::to_tsv() const {
  std::string out;
  for (const auto& l : labels_) out += '\t' + l;
  out += '\n';
  for (std::size_t i = 0; i < size(); ++i) {
    out += labels_[i];
    for (std::size_t j = 0; j < size(); ++j) out += '\t' + to_exact_decimal_string(at(i, j));
    out += '\n';
  }
  return out;
}

DistanceMatrix distance_matrix(const OrderingSet& set) {
  check_ordering_set(set);
  const std::size_t n = set.labels.size();
  const auto pos = label_positions(set);
  std::vector<Rational> values(n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      values[i * n + j] = values[j * n + i] = mean_gap(pos, i, j);
    }
  }
  return DistanceMatrix(set.labels, std::move(values));
}

Linkage parse_linkage(std::string_view name) {
  if (name == "ward") return Linkage::ward;
  if (name == "average") return Linkage::average;
  if (name == "single") return Linkage::single;
  if (name == "complete") return Linkage::complete;
  throw LookupError("unknown linkage '" + std::string(name) + "'");
}

std::string_view to_string(Linkage linkage) {
  switch (linkage) {
    case Linkage::ward: return "ward";
    case Linkage::average: return "average";
    case Linkage::single: return "single";
    case Linkage::complete: return "complete";
  }
  return "unknown";
}

LabelPartition cluster_blocks(const DistanceMatrix& matrix, const ClusterStop& stop, Linkage linkage) {
  const std::size_t n = matrix.size();
  std::size_t target = 1;
  double cutoff = std::numeric_limits<double>::infinity();
  if (const auto* k = std::get_if<ClusterCount>(&stop)) {
    if (k->k < 1 || k->k > n) {
      throw RangeError("cluster count " + std::to_string(k->k) + " outside [1, " + std::to_string(n) + "]");
    }
    target = k->k;
  } else {
    cutoff = std::get<DistanceCutoff>(stop).max_distance;
  }
  if (n == 0) return {};

  // Ward works on squared distances (Lance-Williams form); the others on plain distances.
  const bool ward = linkage == Linkage::ward;
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = to_double(matrix.at(i, j));
      d[i][j] = ward ? v * v : v;
    }
  }

  std::vector<std::vector<std::size_t>> clusters(n);
  for (std::size_t i = 0; i < n; ++i) clusters[i] = {i};
  std::vector<bool> alive(n, true);
  // Smallest member label (by string order) of each live cluster, for tie-breaking.
  std::vector<std::string> min_label(matrix.labels());

  constexpr double rel_eps = 1e-9;
  for (std::size_t live = n; live > target; --live) {
    std::size_t bi = n;
    std::size_t bj = n;
    double best = 0.0;
    auto key = [&](std::size_t i, std::size_t j) {
      return std::minmax(min_label[i], min_label[j]);
    };
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!alive[j]) continue;
        const double v = d[i][j];
        const double eps = rel_eps * std::max(1.0, std::abs(best));
        if (bi == n || v < best - eps || (std::abs(v - best) <= eps && key(i, j) < key(bi, bj))) {
          bi = i;
          bj = j;
          best = v;
        }
      }
    }
    const double merge_distance = ward ? std::sqrt(best) : best;
    if (merge_distance > cutoff) break;

    const double ni = static_cast<double>(clusters[bi].size());
    const double nj = static_cast<double>(clusters[bj].size());
    for (std::size_t k = 0; k < n; ++k) {
      if (!alive[k] || k == bi || k == bj) continue;
      const double nk = static_cast<double>(clusters[k].size());
      double v = 0.0;
      switch (linkage) {
        case Linkage::ward:
          v = ((ni + nk) * d[bi][k] + (nj + nk) * d[bj][k] - nk * d[bi][bj]) / (ni + nj + nk);
          break;
        case Linkage::average: v = (ni * d[bi][k] + nj * d[bj][k]) / (ni + nj); break;
        case Linkage::single: v = std::min(d[bi][k], d[bj][k]); break;
        case Linkage::complete: v = std::max(d[bi][k], d[bj][k]); break;
      }
      d[bi][k] = d[k][bi] = v;
    }
    clusters[bi].insert(clusters[bi].end(), clusters[bj].begin(), clusters[bj].end());
    clusters[bj].clear();
    alive[bj] = false;
    min_label[bi] = std::min(min_label[bi], min_label[bj]);
  }

  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) {
    if (!alive[i]) continue;
    auto g = clusters[i];
    std::sort(g.begin(), g.end());
    groups.push_back(std::move(g));
  }
  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });

  LabelPartition out;
  for (const auto& g : groups) {
    std::vector<std::string> names;
    for (auto i : g) names.push_back(matrix.labels()[i]);
    out.push_back(std::move(names));
  }
  return out;
}

std::size_t count_unique_orderings(const OrderingSet& set) {
  std::set<std::vector<std::string>> distinct(set.orderings.begin(), set.orderings.end());
  return distinct.size();
}

namespace {

std::size_t count_inversions(std::vector<std::size_t>& v, std::vector<std::size_t>& scratch, std::size_t lo,
                             std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::size_t inv = count_inversions(v, scratch, lo, mid) + count_inversions(v, scratch, mid, hi);
  std::size_t i = lo;
  std::size_t j = mid;
  std::size_t k = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      inv += mid - i;
      scratch[k++] = v[j++];
    } else {
      scratch[k++] = v[i++];
    }
  }
  while (i < mid) scratch[k++] = v[i++];
  while (j < hi) scratch[k++] = v[j++];
  std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo), scratch.begin() + static_cast<std::ptrdiff_t>(hi),
            v.begin() + static_cast<std::ptrdiff_t>(lo));
  return inv;
}

}  // namespace

std::size_t kendall_tau_distance(const std::vector<std::string>& first, const std::vector<std::string>& second) {
  if (first.size() != second.size()) throw ContractError("orderings differ in length");
  std::map<std::string_view, std::size_t> rank;
  for (std::size_t i = 0; i < first.size(); ++i) {
    if (!rank.emplace(first[i], i).second) throw ContractError("label '" + first[i] + "' repeated");
  }
  std::vector<std::size_t> seq;
  seq.reserve(second.size());
  std::vector<bool> seen(first.size(), false);
  for (const auto& label : second) {
    auto it = rank.find(label);
    if (it == rank.end()) throw ContractError("label '" + label + "' missing from the first ordering");
    if (seen[it->second]) throw ContractError("label '" + label + "' repeated");
    seen[it->second] = true;
    seq.push_back(it->second);
  }
  std::vector<std::size_t> scratch(seq.size());
  return count_inversions(seq, scratch, 0, seq.size());
}

}  // namespace themeorder
