#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace themeorder {

/// Article publication time at minute granularity. Ordered by (date, hour, minute).
struct PublicationTime {
  int year = 1970;
  int month = 1;
  int day = 1;
  int hour = 0;
  int minute = 0;

  auto operator<=>(const PublicationTime&) const = default;

  bool is_valid() const;
  /// "YYYY-MM-DDTHH:MM"
  std::string to_iso() const;
};

struct Document {
  std::string id;
  PublicationTime published;
  std::vector<std::string> sentences;
  /// One segment id per sentence; contiguous spans numbered 0, 1, 2, ...
  std::vector<int> segments;

  bool operator==(const Document&) const = default;
};

struct SentenceRef {
  std::string doc;
  std::size_t pos = 0;

  auto operator<=>(const SentenceRef&) const = default;
};

/// A cross-document set of sentences conveying the same information.
struct Theme {
  std::string id;
  std::vector<SentenceRef> members;

  bool operator==(const Theme&) const = default;
};

struct Corpus {
  std::vector<Document> documents;
  std::vector<Theme> themes;

  bool operator==(const Corpus&) const = default;
};

struct Violation {
  std::string entity;  // e.g. "document d1", "theme T3"
  std::string rule;    // short machine-friendly rule name
  std::string detail;

  std::string describe() const { return entity + ": " + rule + ": " + detail; }
  bool operator==(const Violation&) const = default;
};

/// Checks every corpus invariant. An empty result means all strategies accept the corpus.
std::vector<Violation> validate_corpus(const Corpus& corpus);

/// doc_id -> index into corpus.documents. Assumes unique ids (validated corpus).
class DocumentIndex {
 public:
  explicit DocumentIndex(const Corpus& corpus);

  /// Throws LookupError for unknown ids.
  std::size_t index_of(std::string_view doc_id) const;
  const Document& document(std::string_view doc_id) const;
  bool contains(std::string_view doc_id) const { return by_id_.contains(std::string(doc_id)); }

 private:
  const Corpus* corpus_;
  std::unordered_map<std::string, std::size_t> by_id_;
};

enum class Strategy { majority, chronological, augmented };

std::string_view to_string(Strategy s);

}  // namespace themeorder
