#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "themeorder/model.hpp"

namespace themeorder {

/// Several alternative total orders over the same labels.
struct OrderingSet {
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> orderings;

  bool operator==(const OrderingSet&) const = default;
};

struct CorpusParseOptions {
  /// Documents without a `segments` array get an empty one. Only meant for
  /// feeding the fallback segmenter; such a corpus does not validate.
  bool allow_missing_segments = false;
  /// Skip validation (used together with allow_missing_segments).
  bool validate = true;
};

/// Parses the JSON corpus format.
///
/// Throws ParseError (with a line or JSON-pointer location) for malformed
/// input and ValidationError listing every violated invariant otherwise.
/// Timestamps with seconds are truncated to the minute; a note is appended
/// to `warnings` when it is non-null.
Corpus parse_corpus(std::string_view text, std::vector<std::string>* warnings = nullptr,
                    const CorpusParseOptions& options = {});

std::string serialize_corpus(const Corpus& corpus);

/// "YYYY-MM-DDTHH:MM", optionally followed by ":SS" and fractional seconds.
PublicationTime parse_publication_time(std::string_view text, bool* truncated = nullptr);

/// Parses the plain-text orderings format: a label line, then one
/// permutation per non-empty line.
OrderingSet parse_ordering_set(std::string_view text);

std::string serialize_ordering_set(const OrderingSet& set);

/// Throws ContractError if the set breaks its invariants.
void check_ordering_set(const OrderingSet& set);

std::string read_file(const std::string& path);

}  // namespace themeorder
