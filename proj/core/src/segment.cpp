#include "themeorder/segment.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "themeorder/error.hpp"

namespace themeorder {

namespace {

const std::set<std::string>& stop_words() {
  static const std::set<std::string> words = {
      "a",    "about", "after", "all",   "also",  "an",   "and",   "are",  "as",    "at",   "be",    "been",
      "but",  "by",    "can",   "could", "did",   "do",   "for",   "from", "had",   "has",  "have",  "he",
      "her",  "his",   "i",     "if",    "in",    "into", "is",    "it",   "its",   "more", "no",    "not",
      "of",   "on",    "one",   "or",    "other", "our",  "out",   "over", "said",  "she",  "so",    "some",
      "than", "that",  "the",   "their", "them",  "then", "there", "they", "this",  "to",   "up",    "was",
      "we",   "were",  "what",  "when",  "which", "who",  "will",  "with", "would", "you",  "your"};
  return words;
}

using TermCounts = std::map<std::string, double>;

double cosine(const TermCounts& x, const TermCounts& y) {
  double dot = 0.0;
  double nx = 0.0;
  double ny = 0.0;
  for (const auto& [w, c] : x) {
    nx += c * c;
    if (auto it = y.find(w); it != y.end()) dot += c * it->second;
  }
  for (const auto& [w, c] : y) ny += c * c;
  if (nx == 0.0 || ny == 0.0) return 0.0;
  return dot / std::sqrt(nx * ny);
}

}  // namespace

std::vector<std::string> content_words(const std::string& sentence) {
  std::vector<std::string> out;
  std::string word;
  auto flush = [&] {
    if (!word.empty() && !stop_words().contains(word)) out.push_back(word);
    word.clear();
  };
  for (unsigned char c : sentence) {
    if (std::isalnum(c)) {
      word.push_back(static_cast<char>(std::tolower(c)));
    } else {
      flush();
    }
  }
  flush();
  return out;
}

std::vector<double> gap_similarities(const Document& document, std::size_t window) {
  if (window == 0) throw RangeError("segmentation window must be at least 1");
  const std::size_t n = document.sentences.size();
  std::vector<TermCounts> terms(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& w : content_words(document.sentences[i])) terms[i][w] += 1.0;
  }

  std::vector<double> sims;
  for (std::size_t gap = 0; gap + 1 < n; ++gap) {
    TermCounts left;
    TermCounts right;
    const std::size_t lo = gap + 1 >= window ? gap + 1 - window : 0;
    for (std::size_t i = lo; i <= gap; ++i) {
      for (const auto& [w, c] : terms[i]) left[w] += c;
    }
    for (std::size_t i = gap + 1; i < std::min(n, gap + 1 + window); ++i) {
      for (const auto& [w, c] : terms[i]) right[w] += c;
    }
    sims.push_back(cosine(left, right));
  }
  return sims;
}

std::vector<int> naive_segment(const Document& document, std::size_t window) {
  const auto sims = gap_similarities(document, window);
  std::vector<int> segments(document.sentences.size(), 0);
  if (sims.empty()) return segments;

  const double mean = std::accumulate(sims.begin(), sims.end(), 0.0) / static_cast<double>(sims.size());
  double var = 0.0;
  for (double s : sims) var += (s - mean) * (s - mean);
  const double cutoff = mean - std::sqrt(var / static_cast<double>(sims.size()));

  int segment = 0;
  for (std::size_t gap = 0; gap < sims.size(); ++gap) {
    const bool local_min = (gap == 0 || sims[gap] <= sims[gap - 1]) && (gap + 1 == sims.size() || sims[gap] <= sims[gap + 1]);
    if (local_min && sims[gap] < cutoff - 1e-12) ++segment;
    segments[gap + 1] = segment;
  }
  return segments;
}

Corpus segment_missing(Corpus corpus, std::size_t window) {
  for (auto& doc : corpus.documents) {
    if (doc.segments.empty()) doc.segments = naive_segment(doc, window);
  }
  return corpus;
}

}  // namespace themeorder
