#include "themeorder/majority.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "themeorder/error.hpp"

namespace themeorder {

PrecedenceGraph::PrecedenceGraph(std::vector<std::string> theme_ids)
    : ids_(std::move(theme_ids)), counts_(ids_.size() * ids_.size(), 0) {
  index_.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (!index_.emplace(ids_[i], i).second) throw ContractError("duplicate theme id '" + ids_[i] + "'");
  }
}

std::size_t PrecedenceGraph::index_of(std::string_view theme_id) const {
  auto it = index_.find(std::string(theme_id));
  if (it == index_.end()) throw LookupError("unknown theme id '" + std::string(theme_id) + "'");
  return it->second;
}

void PrecedenceGraph::add(std::size_t from, std::size_t to, std::uint64_t n) {
  if (from >= size() || to >= size()) throw ContractError("node index out of range");
  if (from == to) throw ContractError("precedence graph has no self-loops");
  counts_[from * size() + to] += n;
}

std::uint64_t PrecedenceGraph::total_weight() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

PrecedenceGraph build_precedence_counts(const Corpus& corpus) {
  std::vector<std::string> ids;
  ids.reserve(corpus.themes.size());
  for (const auto& t : corpus.themes) ids.push_back(t.id);
  PrecedenceGraph graph(std::move(ids));

  const DocumentIndex docs(corpus);
  constexpr std::size_t absent = static_cast<std::size_t>(-1);
  // first[d][t]: minimum position of theme t's members in document d.
  std::vector<std::vector<std::size_t>> first(corpus.documents.size(),
                                              std::vector<std::size_t>(corpus.themes.size(), absent));
  for (std::size_t t = 0; t < corpus.themes.size(); ++t) {
    for (const auto& ref : corpus.themes[t].members) {
      auto& slot = first[docs.index_of(ref.doc)][t];
      slot = std::min(slot, ref.pos);
    }
  }

  for (const auto& positions : first) {
    for (std::size_t i = 0; i < positions.size(); ++i) {
      if (positions[i] == absent) continue;
      for (std::size_t j = i + 1; j < positions.size(); ++j) {
        if (positions[j] == absent) continue;
        // Two themes can share their first sentence; such a document says nothing about their order.
        if (positions[i] < positions[j]) graph.add(i, j);
        else if (positions[j] < positions[i]) graph.add(j, i);
      }
    }
  }
  return graph;
}

namespace {

void require_permutation(std::span<const std::size_t> sequence, std::size_t n) {
  if (sequence.size() != n) {
    throw ContractError("sequence has " + std::to_string(sequence.size()) + " items, graph has " + std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (auto v : sequence) {
    if (v >= n) throw ContractError("node index " + std::to_string(v) + " out of range");
    if (seen[v]) throw ContractError("node index " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
}

}  // namespace

std::uint64_t order_weight(std::span<const std::size_t> sequence, const PrecedenceGraph& graph) {
  require_permutation(sequence, graph.size());
  std::uint64_t weight = 0;
  for (std::size_t a = 0; a < sequence.size(); ++a) {
    for (std::size_t b = a + 1; b < sequence.size(); ++b) weight += graph.count(sequence[a], sequence[b]);
  }
  return weight;
}

std::uint64_t order_weight(std::span<const std::string> sequence, const PrecedenceGraph& graph) {
  std::vector<std::size_t> idx;
  idx.reserve(sequence.size());
  for (const auto& id : sequence) {
    try {
      idx.push_back(graph.index_of(id));
    } catch (const LookupError& e) {
      throw ContractError(e.what());
    }
  }
  return order_weight(idx, graph);
}

std::vector<std::size_t> greedy_linearize(const PrecedenceGraph& graph, const TieBreak& tie_break) {
  const std::size_t n = graph.size();
  std::vector<std::int64_t> potential(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      potential[i] += static_cast<std::int64_t>(graph.count(i, j)) - static_cast<std::int64_t>(graph.count(j, i));
    }
  }

  std::mt19937_64 rng(tie_break.seed.value_or(0));
  std::vector<bool> removed(n, false);
  std::vector<std::size_t> order;
  order.reserve(n);
  std::vector<std::size_t> tied;

  for (std::size_t step = 0; step < n; ++step) {
    tied.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (removed[i]) continue;
      if (tied.empty() || potential[i] > potential[tied.front()]) {
        tied.assign(1, i);
      } else if (potential[i] == potential[tied.front()]) {
        tied.push_back(i);
      }
    }
    std::size_t pick;
    if (tie_break.seed) {
      std::uniform_int_distribution<std::size_t> dist(0, tied.size() - 1);
      pick = tied[dist(rng)];
    } else {
      pick = *std::min_element(tied.begin(), tied.end(), [&](std::size_t a, std::size_t b) {
        return graph.theme_id(a) < graph.theme_id(b);
      });
    }

    removed[pick] = true;
    order.push_back(pick);
    // Drop every edge touching `pick` from the remaining potentials.
    for (std::size_t j = 0; j < n; ++j) {
      if (removed[j]) continue;
      potential[j] += static_cast<std::int64_t>(graph.count(pick, j)) - static_cast<std::int64_t>(graph.count(j, pick));
    }
  }
  return order;
}

std::pair<std::vector<std::size_t>, std::uint64_t> brute_force_optimal(const PrecedenceGraph& graph,
                                                                        std::size_t max_n) {
  const std::size_t n = graph.size();
  if (n > max_n) {
    throw RangeError("brute force limited to " + std::to_string(max_n) + " nodes, graph has " + std::to_string(n));
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  // Enumerating in id order makes the first maximum found the lexicographically smallest.
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return graph.theme_id(a) < graph.theme_id(b); });
  std::vector<std::size_t> ranks(n);
  std::iota(ranks.begin(), ranks.end(), 0);

  std::vector<std::size_t> best = perm;
  std::uint64_t best_weight = 0;
  bool first = true;
  do {
    std::uint64_t w = 0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) w += graph.count(perm[ranks[a]], perm[ranks[b]]);
    }
    if (first || w > best_weight) {
      first = false;
      best_weight = w;
      for (std::size_t k = 0; k < n; ++k) best[k] = perm[ranks[k]];
    }
  } while (std::next_permutation(ranks.begin(), ranks.end()));
  return {best, best_weight};
}

OrderingResult majority_order(const Corpus& corpus, const TieBreak& tie_break) {
  PrecedenceGraph graph = build_precedence_counts(corpus);
  const auto order = greedy_linearize(graph, tie_break);
  OrderingResult result;
  result.strategy = Strategy::majority;
  for (auto i : order) result.sequence.push_back(graph.theme_id(i));
  const std::uint64_t weight = order_weight(order, graph);
  result.diagnostics = MajorityDiagnostics{std::move(graph), weight};
  return result;
}

std::string dump_graph(const PrecedenceGraph& graph) {
  std::vector<std::size_t> by_id(graph.size());
  std::iota(by_id.begin(), by_id.end(), 0);
  std::sort(by_id.begin(), by_id.end(), [&](std::size_t a, std::size_t b) { return graph.theme_id(a) < graph.theme_id(b); });
  std::string out;
  for (auto i : by_id) {
    for (auto j : by_id) {
      if (i == j || graph.count(i, j) == 0) continue;
      out += graph.theme_id(i) + ' ' + graph.theme_id(j) + ' ' + std::to_string(graph.count(i, j)) + '\n';
    }
  }
  return out;
}

}  // namespace themeorder
