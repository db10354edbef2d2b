#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "themeorder/model.hpp"

namespace themeorder {

/// Lower-cased alphanumeric tokens minus a small English stop list.
std::vector<std::string> content_words(const std::string& sentence);

/// Cosine similarity across each sentence gap: the `window` sentences before
/// the gap against the `window` sentences after it. Size = sentences - 1.
std::vector<double> gap_similarities(const Document& document, std::size_t window);

/// Fallback topical segmenter. A gap becomes a boundary when its similarity
/// is a local minimum and lies strictly below mean - stddev of all gap
/// similarities. Throws RangeError when window == 0.
std::vector<int> naive_segment(const Document& document, std::size_t window);

/// Fills `segments` for every document that has none.
Corpus segment_missing(Corpus corpus, std::size_t window);

}  // namespace themeorder
