#pragma once

#include <string>
#include <vector>

#include "themeorder/model.hpp"
#include "themeorder/result.hpp"

namespace themeorder {

/// Earliest publication time among the documents holding the theme's
/// members. When several members sit in that document, the one with the
/// smallest position is the stamp sentence.
ThemeTimeStamp theme_timestamp(const Theme& theme, const Corpus& corpus);
ThemeTimeStamp theme_timestamp(const Theme& theme, const DocumentIndex& index);

/// Strict total order used by chronological ordering: time stamp, then stamp
/// sentence position (equal times imply the same article), then theme id.
bool chronologically_before(const ThemeTimeStamp& a, const ThemeTimeStamp& b);

/// Themes by first publication; themes first reported in the same article
/// keep that article's order.
OrderingResult chronological_order(const Corpus& corpus);

/// "theme_id ISO-time doc_id position", one line per stamp.
std::string dump_timestamps(const std::vector<ThemeTimeStamp>& stamps);

}  // namespace themeorder
