#include "themeorder/model.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <set>

#include "themeorder/error.hpp"

namespace themeorder {

bool PublicationTime::is_valid() const {
  const std::chrono::year_month_day ymd{std::chrono::year{year}, std::chrono::month{static_cast<unsigned>(month)},
                                        std::chrono::day{static_cast<unsigned>(day)}};
  return month >= 1 && day >= 1 && ymd.ok() && hour >= 0 && hour <= 23 && minute >= 0 && minute <= 59;
}

std::string PublicationTime::to_iso() const {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d", year, month, day, hour, minute);
  return buf;
}

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::majority: return "majority";
    case Strategy::chronological: return "chronological";
    case Strategy::augmented: return "augmented";
  }
  return "unknown";
}

namespace {

void check_document(const Document& doc, std::vector<Violation>& out) {
  const std::string entity = "document " + doc.id;
  if (doc.id.empty()) out.push_back({"document #?", "empty-id", "document id must be non-empty"});
  if (!doc.published.is_valid()) {
    out.push_back({entity, "invalid-time", "publication time " + doc.published.to_iso() + " is not a valid minute"});
  }
  if (doc.sentences.empty()) out.push_back({entity, "no-sentences", "document has no sentences"});
  if (doc.segments.size() != doc.sentences.size()) {
    out.push_back({entity, "segment-count",
                   std::to_string(doc.segments.size()) + " segment ids for " + std::to_string(doc.sentences.size()) +
                       " sentences"});
    return;
  }
  if (!doc.segments.empty() && doc.segments.front() != 0) {
    out.push_back({entity, "segment-start", "first segment id is " + std::to_string(doc.segments.front()) + ", expected 0"});
  }
  for (std::size_t i = 1; i < doc.segments.size(); ++i) {
    const int step = doc.segments[i] - doc.segments[i - 1];
    if (step != 0 && step != 1) {
      out.push_back({entity, "segment-order",
                     "segment id " + std::to_string(doc.segments[i]) + " at position " + std::to_string(i) +
                         " follows " + std::to_string(doc.segments[i - 1]) + " (ids must be non-decreasing without gaps)"});
      break;
    }
  }
}

}  // namespace

std::vector<Violation> validate_corpus(const Corpus& corpus) {
  std::vector<Violation> out;

  std::map<std::string, std::size_t> doc_sizes;
  std::map<std::string, int> doc_seen;
  for (const auto& doc : corpus.documents) {
    if (++doc_seen[doc.id] == 2) out.push_back({"document " + doc.id, "duplicate-id", "document id used more than once"});
    doc_sizes.emplace(doc.id, doc.sentences.size());
    check_document(doc, out);
  }

  std::map<PublicationTime, std::vector<std::string>> by_time;
  for (const auto& doc : corpus.documents) by_time[doc.published].push_back(doc.id);
  for (const auto& [time, ids] : by_time) {
    if (ids.size() < 2) continue;
    std::string names;
    for (const auto& id : ids) names += (names.empty() ? "" : ", ") + id;
    out.push_back({"documents " + names, "duplicate-time", "share publication time " + time.to_iso()});
  }

  std::map<std::string, int> theme_seen;
  for (const auto& theme : corpus.themes) {
    const std::string entity = "theme " + theme.id;
    if (theme.id.empty()) out.push_back({"theme #?", "empty-id", "theme id must be non-empty"});
    if (++theme_seen[theme.id] == 2) out.push_back({entity, "duplicate-id", "theme id used more than once"});
    if (theme.members.empty()) out.push_back({entity, "no-members", "theme has no member sentences"});
    std::set<SentenceRef> seen;
    for (const auto& ref : theme.members) {
      const std::string where = "(" + ref.doc + ", " + std::to_string(ref.pos) + ")";
      auto it = doc_sizes.find(ref.doc);
      if (it == doc_sizes.end()) {
        out.push_back({entity, "unknown-document", "member " + where + " names no document"});
      } else if (ref.pos >= it->second) {
        out.push_back({entity, "position-out-of-range",
                       "member " + where + " but document has " + std::to_string(it->second) + " sentence(s)"});
      }
      if (!seen.insert(ref).second) out.push_back({entity, "duplicate-member", "member " + where + " listed twice"});
    }
  }
  return out;
}

DocumentIndex::DocumentIndex(const Corpus& corpus) : corpus_(&corpus) {
  by_id_.reserve(corpus.documents.size());
  for (std::size_t i = 0; i < corpus.documents.size(); ++i) by_id_.emplace(corpus.documents[i].id, i);
}

std::size_t DocumentIndex::index_of(std::string_view doc_id) const {
  auto it = by_id_.find(std::string(doc_id));
  if (it == by_id_.end()) throw LookupError("unknown document id '" + std::string(doc_id) + "'");
  return it->second;
}

const Document& DocumentIndex::document(std::string_view doc_id) const {
  return corpus_->documents[index_of(doc_id)];
}

}  // namespace themeorder
