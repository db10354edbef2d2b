#include "themeorder/fisher.hpp"

#include <algorithm>

#include "themeorder/error.hpp"

namespace themeorder {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

cpp_int binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  cpp_int r = 1;
  // Each prefix product is itself a binomial coefficient, so the division is exact.
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string FisherResult::fraction() const {
  return boost::multiprecision::numerator(exact).str() + "/" + boost::multiprecision::denominator(exact).str();
}

FisherResult fisher_exact_one_sided(const ContingencyTable2x2& t) {
  const std::uint64_t n = t.a + t.b + t.c + t.d;
  if (n == 0) throw RangeError("Fisher exact test is undefined for an all-zero table");
  const std::uint64_t row1 = t.a + t.b;
  const std::uint64_t col1 = t.a + t.c;

  cpp_int tail = 0;
  for (std::uint64_t x = t.a; x <= std::min(row1, col1); ++x) {
    tail += binomial(col1, x) * binomial(n - col1, row1 - x);
  }
  return {cpp_rational(tail, binomial(n, row1))};
}

}  // namespace themeorder
