#include "themeorder/augmented.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "themeorder/chrono.hpp"
#include "themeorder/error.hpp"

namespace themeorder {

namespace {

// Member counts keyed by (document index, segment id).
using SegmentHistogram = std::map<std::pair<std::size_t, int>, std::uint64_t>;

SegmentHistogram histogram(const Theme& theme, const Corpus& corpus, const DocumentIndex& index) {
  SegmentHistogram h;
  for (const auto& ref : theme.members) {
    const std::size_t d = index.index_of(ref.doc);
    const Document& doc = corpus.documents[d];
    if (ref.pos >= doc.segments.size()) {
      throw ContractError("theme '" + theme.id + "' member (" + ref.doc + ", " + std::to_string(ref.pos) +
                          ") has no segment id");
    }
    ++h[{d, doc.segments[ref.pos]}];
  }
  return h;
}

std::pair<std::uint64_t, std::uint64_t> count_pairs(const SegmentHistogram& a, const SegmentHistogram& b) {
  std::map<std::size_t, std::uint64_t> b_per_doc;
  for (const auto& [key, n] : b) b_per_doc[key.first] += n;

  std::uint64_t same_text = 0;
  std::uint64_t same_segment = 0;
  for (const auto& [key, n] : a) {
    if (auto it = b_per_doc.find(key.first); it != b_per_doc.end()) same_text += n * it->second;
    if (auto it = b.find(key); it != b.end()) same_segment += n * it->second;
  }
  return {same_text, same_segment};
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

struct BlocksAndStamps {
  BlockPartition partition;
  std::vector<ThemeTimeStamp> stamps;  // output order
};

BlocksAndStamps compute_blocks(const Corpus& corpus, const RelatednessThreshold& threshold) {
  const DocumentIndex index(corpus);
  const std::size_t n = corpus.themes.size();

  std::vector<SegmentHistogram> hist;
  hist.reserve(n);
  for (const auto& theme : corpus.themes) hist.push_back(histogram(theme, corpus, index));

  DisjointSets sets(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto [same_text, same_segment] = count_pairs(hist[i], hist[j]);
      const Rational ratio = same_text == 0 ? Rational(0)
                                            : Rational(static_cast<std::int64_t>(same_segment),
                                                       static_cast<std::int64_t>(same_text));
      if (threshold.admits(ratio)) sets.unite(i, j);
    }
  }

  // Chronological rank of every theme; a block is placed by its earliest member.
  std::vector<ThemeTimeStamp> stamps;
  stamps.reserve(n);
  for (const auto& theme : corpus.themes) stamps.push_back(theme_timestamp(theme, index));
  std::vector<std::size_t> by_time(n);
  std::iota(by_time.begin(), by_time.end(), 0);
  std::sort(by_time.begin(), by_time.end(),
            [&](std::size_t a, std::size_t b) { return chronologically_before(stamps[a], stamps[b]); });

  // Walking themes chronologically, a block appears at its earliest member and
  // collects the rest in chronological order.
  std::map<std::size_t, std::size_t> block_of_root;
  std::vector<std::vector<std::size_t>> members;
  for (auto t : by_time) {
    const auto root = sets.find(t);
    auto [it, inserted] = block_of_root.emplace(root, members.size());
    if (inserted) members.emplace_back();
    members[it->second].push_back(t);
  }

  BlocksAndStamps out;
  for (const auto& block : members) {
    Block b;
    const ThemeTimeStamp& head = stamps[block.front()];
    b.time = head.time;
    b.stamp_theme = head.theme_id;
    for (auto t : block) {
      b.themes.push_back(corpus.themes[t].id);
      out.stamps.push_back(stamps[t]);
    }
    out.partition.blocks.push_back(std::move(b));
  }
  return out;
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> cooccurrence_counts(const Theme& a, const Theme& b, const Corpus& corpus) {
  const DocumentIndex index(corpus);
  return count_pairs(histogram(a, corpus, index), histogram(b, corpus, index));
}

RelatednessScore relatedness(const Theme& a, const Theme& b, const Corpus& corpus) {
  const auto [same_text, same_segment] = cooccurrence_counts(a, b, corpus);
  RelatednessScore s;
  // Canonical pair order keeps the score symmetric.
  s.first = std::min(a.id, b.id);
  s.second = std::max(a.id, b.id);
  s.pairs_same_text = same_text;
  s.pairs_same_segment = same_segment;
  if (same_text > 0) {
    s.ratio = Rational(static_cast<std::int64_t>(same_segment), static_cast<std::int64_t>(same_text));
  }
  return s;
}

BlockPartition build_blocks(const Corpus& corpus, const RelatednessThreshold& threshold) {
  return compute_blocks(corpus, threshold).partition;
}

OrderingResult augmented_order(const Corpus& corpus, const RelatednessThreshold& threshold) {
  auto [partition, stamps] = compute_blocks(corpus, threshold);
  OrderingResult result;
  result.strategy = Strategy::augmented;
  for (const auto& block : partition.blocks) {
    result.sequence.insert(result.sequence.end(), block.themes.begin(), block.themes.end());
  }
  result.diagnostics = AugmentedDiagnostics{std::move(partition), std::move(stamps)};
  return result;
}

std::string dump_blocks(const BlockPartition& partition) {
  std::string out;
  for (std::size_t k = 0; k < partition.blocks.size(); ++k) {
    const Block& b = partition.blocks[k];
    out += "block_" + std::to_string(k + 1) + ' ' + b.time.to_iso() + ':';
    for (const auto& t : b.themes) out += ' ' + t;
    out += '\n';
  }
  return out;
}

}  // namespace themeorder
