#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace themeorder {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `location()` is a "line N" or JSON-pointer string.
class ParseError : public Error {
 public:
  ParseError(std::string location, const std::string& what)
      : Error(location.empty() ? what : location + ": " + what), location_(std::move(location)) {}

  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

/// Well-formed input that breaks one or more domain invariants.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations)
      : Error(join(violations)), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out = std::to_string(v.size()) + " validation error(s)";
    for (const auto& s : v) out += "\n  " + s;
    return out;
  }
  std::vector<std::string> violations_;
};

/// A caller broke an operation's precondition (e.g. a non-permutation).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Unknown label or identifier.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Argument outside its admissible range (cluster count, brute-force size, ...).
class RangeError : public Error {
 public:
  using Error::Error;
};

}  // namespace themeorder
