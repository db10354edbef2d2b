#include "themeorder/chrono.hpp"

#include <algorithm>
#include <tuple>

#include "themeorder/error.hpp"

namespace themeorder {

ThemeTimeStamp theme_timestamp(const Theme& theme, const DocumentIndex& index) {
  if (theme.members.empty()) throw ContractError("theme '" + theme.id + "' has no members");
  const SentenceRef* best = nullptr;
  const PublicationTime* best_time = nullptr;
  for (const auto& ref : theme.members) {
    const PublicationTime& t = index.document(ref.doc).published;
    if (!best || t < *best_time || (t == *best_time && ref.pos < best->pos)) {
      best = &ref;
      best_time = &t;
    }
  }
  return {theme.id, *best_time, *best};
}

ThemeTimeStamp theme_timestamp(const Theme& theme, const Corpus& corpus) {
  return theme_timestamp(theme, DocumentIndex(corpus));
}

bool chronologically_before(const ThemeTimeStamp& a, const ThemeTimeStamp& b) {
  // Equal times come from the same article, so positions are comparable.
  // Two themes can only tie on position if they share that sentence.
  return std::tie(a.time, a.stamp_sentence.pos, a.theme_id) < std::tie(b.time, b.stamp_sentence.pos, b.theme_id);
}

OrderingResult chronological_order(const Corpus& corpus) {
  const DocumentIndex index(corpus);
  std::vector<ThemeTimeStamp> stamps;
  stamps.reserve(corpus.themes.size());
  for (const auto& theme : corpus.themes) stamps.push_back(theme_timestamp(theme, index));
  std::sort(stamps.begin(), stamps.end(), chronologically_before);

  OrderingResult result;
  result.strategy = Strategy::chronological;
  for (const auto& s : stamps) result.sequence.push_back(s.theme_id);
  result.diagnostics = ChronologicalDiagnostics{std::move(stamps)};
  return result;
}

std::string dump_timestamps(const std::vector<ThemeTimeStamp>& stamps) {
  std::string out;
  for (const auto& s : stamps) {
    out += s.theme_id + ' ' + s.time.to_iso() + ' ' + s.stamp_sentence.doc + ' ' + std::to_string(s.stamp_sentence.pos) + '\n';
  }
  return out;
}

}  // namespace themeorder
