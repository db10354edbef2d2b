#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace themeorder {

/// [[a, b], [c, d]]
struct ContingencyTable2x2 {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;
  std::uint64_t d = 0;
};

struct FisherResult {
  boost::multiprecision::cpp_rational exact;

  double value() const { return exact.convert_to<double>(); }
  /// Reduced "p/q".
  std::string fraction() const;
};

/// One-sided Fisher exact test: P(X >= a) for the top-left cell under the
/// hypergeometric law with both margins fixed. Exact big-rational arithmetic.
/// Throws RangeError for an all-zero table.
FisherResult fisher_exact_one_sided(const ContingencyTable2x2& table);

/// Exact binomial coefficient.
boost::multiprecision::cpp_int binomial(std::uint64_t n, std::uint64_t k);

}  // namespace themeorder
