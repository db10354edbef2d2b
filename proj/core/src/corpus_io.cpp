#include "themeorder/corpus_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "themeorder/error.hpp"

namespace themeorder {

namespace {

using nlohmann::json;

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw ParseError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path + "/" + key, "missing required field");
  return *it;
}

std::string string_field(const json& obj, const char* key, const std::string& path) {
  const json& v = field(obj, key, path);
  if (!v.is_string()) throw ParseError(path + "/" + key, "expected a string");
  return v.get<std::string>();
}

const json& array_field(const json& obj, const char* key, const std::string& path) {
  const json& v = field(obj, key, path);
  if (!v.is_array()) throw ParseError(path + "/" + key, "expected an array");
  return v;
}

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

int two_digits(std::string_view s, std::size_t at, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data() + at, s.data() + at + 2, v);
  if (ec != std::errc{} || ptr != s.data() + at + 2) throw ParseError("", "bad timestamp '" + std::string(whole) + "'");
  return v;
}

Document parse_document(const json& j, const std::string& path, const CorpusParseOptions& options,
                        std::vector<std::string>* warnings) {
  Document doc;
  doc.id = string_field(j, "id", path);

  const std::string published = string_field(j, "published", path);
  bool truncated = false;
  try {
    doc.published = parse_publication_time(published, &truncated);
  } catch (const ParseError& e) {
    throw ParseError(path + "/published", e.what());
  }
  if (truncated && warnings) {
    warnings->push_back("document " + doc.id + ": publication time '" + published + "' truncated to the minute");
  }

  const json& sentences = array_field(j, "sentences", path);
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    if (!sentences[i].is_string()) throw ParseError(path + "/sentences/" + std::to_string(i), "expected a string");
    doc.sentences.push_back(sentences[i].get<std::string>());
  }

  if (options.allow_missing_segments && !j.contains("segments")) return doc;
  const json& segments = array_field(j, "segments", path);
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (!segments[i].is_number_integer()) throw ParseError(path + "/segments/" + std::to_string(i), "expected an integer");
    doc.segments.push_back(segments[i].get<int>());
  }
  return doc;
}

Theme parse_theme(const json& j, const std::string& path) {
  Theme theme;
  theme.id = string_field(j, "id", path);
  const json& members = array_field(j, "members", path);
  for (std::size_t i = 0; i < members.size(); ++i) {
    const std::string mpath = path + "/members/" + std::to_string(i);
    SentenceRef ref;
    ref.doc = string_field(members[i], "doc", mpath);
    const json& pos = field(members[i], "pos", mpath);
    if (!pos.is_number_unsigned()) throw ParseError(mpath + "/pos", "expected a non-negative integer");
    ref.pos = pos.get<std::size_t>();
    theme.members.push_back(std::move(ref));
  }
  return theme;
}

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

PublicationTime parse_publication_time(std::string_view text, bool* truncated) {
  // YYYY-MM-DDTHH:MM[:SS[.fff]]
  if (text.size() < 16 || text[4] != '-' || text[7] != '-' || (text[10] != 'T' && text[10] != ' ') ||
      text[13] != ':') {
    throw ParseError("", "bad timestamp '" + std::string(text) + "', expected YYYY-MM-DDTHH:MM");
  }
  PublicationTime t;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + 4, t.year);
  if (ec != std::errc{} || ptr != text.data() + 4) throw ParseError("", "bad timestamp '" + std::string(text) + "'");
  t.month = two_digits(text, 5, text);
  t.day = two_digits(text, 8, text);
  t.hour = two_digits(text, 11, text);
  t.minute = two_digits(text, 14, text);

  const std::string_view rest = text.substr(16);
  if (!rest.empty()) {
    const bool seconds = rest.size() >= 3 && rest[0] == ':' &&
                         std::all_of(rest.begin() + 1, rest.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '.'; });
    if (!seconds) throw ParseError("", "bad timestamp '" + std::string(text) + "' (time zones are not supported)");
    if (truncated) *truncated = true;
  }
  if (!t.is_valid()) throw ParseError("", "timestamp out of range '" + std::string(text) + "'");
  return t;
}

Corpus parse_corpus(std::string_view text, std::vector<std::string>* warnings, const CorpusParseOptions& options) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("line " + std::to_string(line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1)), e.what());
  }

  Corpus corpus;
  const json& documents = array_field(root, "documents", "");
  for (std::size_t i = 0; i < documents.size(); ++i) {
    corpus.documents.push_back(parse_document(documents[i], "/documents/" + std::to_string(i), options, warnings));
  }
  const json& themes = array_field(root, "themes", "");
  for (std::size_t i = 0; i < themes.size(); ++i) {
    corpus.themes.push_back(parse_theme(themes[i], "/themes/" + std::to_string(i)));
  }

  if (options.validate) {
    const auto violations = validate_corpus(corpus);
    if (!violations.empty()) {
      std::vector<std::string> messages;
      for (const auto& v : violations) messages.push_back(v.describe());
      throw ValidationError(std::move(messages));
    }
  }
  return corpus;
}

std::string serialize_corpus(const Corpus& corpus) {
  json root = json::object();
  json documents = json::array();
  for (const auto& doc : corpus.documents) {
    documents.push_back({{"id", doc.id},
                         {"published", doc.published.to_iso()},
                         {"sentences", doc.sentences},
                         {"segments", doc.segments}});
  }
  json themes = json::array();
  for (const auto& theme : corpus.themes) {
    json members = json::array();
    for (const auto& ref : theme.members) members.push_back({{"doc", ref.doc}, {"pos", ref.pos}});
    themes.push_back({{"id", theme.id}, {"members", std::move(members)}});
  }
  root["documents"] = std::move(documents);
  root["themes"] = std::move(themes);
  return root.dump(2) + "\n";
}

namespace {

// Describes why `row` is not a permutation of the inventory, or returns "".
std::string row_problem(const std::vector<std::string>& row, const std::set<std::string_view>& inventory) {
  std::set<std::string_view> seen;
  for (const auto& label : row) {
    if (!inventory.contains(label)) return "unknown label '" + label + "'";
    if (!seen.insert(label).second) return "duplicate label '" + label + "'";
  }
  for (const auto& label : inventory) {
    if (!seen.contains(label)) return "missing label '" + std::string(label) + "'";
  }
  return {};
}

std::set<std::string_view> inventory_of(const std::vector<std::string>& labels, std::string* duplicate) {
  std::set<std::string_view> inventory;
  for (const auto& label : labels) {
    if (!inventory.insert(label).second && duplicate && duplicate->empty()) *duplicate = label;
  }
  return inventory;
}

}  // namespace

void check_ordering_set(const OrderingSet& set) {
  std::string duplicate;
  const auto inventory = inventory_of(set.labels, &duplicate);
  if (!duplicate.empty()) throw ContractError("label '" + duplicate + "' appears twice in the inventory");
  if (set.orderings.empty()) throw ContractError("an ordering set needs at least one ordering");
  for (std::size_t r = 0; r < set.orderings.size(); ++r) {
    if (auto problem = row_problem(set.orderings[r], inventory); !problem.empty()) {
      throw ContractError("ordering " + std::to_string(r + 1) + ": " + problem);
    }
  }
}

OrderingSet parse_ordering_set(std::string_view text) {
  OrderingSet set;
  std::set<std::string_view> inventory;
  bool have_labels = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    auto words = split_words(line);
    if (words.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);
    if (!have_labels) {
      have_labels = true;
      set.labels = std::move(words);
      std::string duplicate;
      inventory = inventory_of(set.labels, &duplicate);
      if (!duplicate.empty()) throw ParseError(where, "duplicate label '" + duplicate + "' in inventory");
      continue;
    }
    if (auto problem = row_problem(words, inventory); !problem.empty()) {
      throw ParseError(where, "ordering " + std::to_string(set.orderings.size() + 1) + ": " + problem);
    }
    set.orderings.push_back(std::move(words));
  }
  if (!have_labels) throw ParseError("line 1", "missing label inventory line");
  if (set.orderings.empty()) throw ParseError("line " + std::to_string(line_no), "no orderings after the label line");
  return set;
}

std::string serialize_ordering_set(const OrderingSet& set) {
  std::string out;
  auto put = [&out](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ' ';
      out += row[i];
    }
    out += '\n';
  };
  put(set.labels);
  for (const auto& row : set.orderings) put(row);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace themeorder
