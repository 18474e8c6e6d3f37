#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>

#include "bsieve/dd.hpp"

// Binomial pmf rows t(m) = C(n,m) x^m (1-x)^{n-m}, marched across m in
// compensated arithmetic. The march keeps every entry accurate to a few
// ulps even at n ~ 2e4, where both naive binomials and lgamma-based log
// sums lose 4-5 digits.

namespace bsieve {

// Single term, O(n) compensated multiplies. Exact-integer factors are
// folded with x so intermediates stay bounded; the power-of-two ladder in
// ScaledDD absorbs under/overflow of genuinely tiny terms.
inline double binomial_term(std::int64_t n, std::int64_t m, double x) {
  if (n < 0 || m < 0 || m > n)
    throw std::out_of_range("binomial_term: need 0 <= m <= n");
  if (m > n - m) {
    m = n - m;
    x = 1.0 - x;
  }
  ScaledDD t;
  DD omx = two_sum(1.0, -x);  // exact split of 1-x
  for (std::int64_t j = 0; j < n - m; ++j) t.mul(omx);
  for (std::int64_t j = 1; j <= m; ++j) {
    t.mul_d(static_cast<double>(n - m + j) * x);
    t.div_d(static_cast<double>(j));
  }
  return t.to_double();
}

// Full row t(0..n) for one x; accumulates weight * t(m) into row[m].
inline void binomial_row_accumulate(std::span<double> row, std::int64_t n,
                                    double x, double weight) {
  if (static_cast<std::int64_t>(row.size()) < n + 1)
    throw std::invalid_argument("binomial_row_accumulate: row too small");
  ScaledDD t;
  DD omx = two_sum(1.0, -x);
  for (std::int64_t j = 0; j < n; ++j) t.mul(omx);
  row[0] += weight * t.to_double();
  DD ratio = dd_div(dd_from(x), omx);
  for (std::int64_t m = 1; m <= n; ++m) {
    t.mul(ratio);
    t.mul_d(static_cast<double>(n - m + 1));
    t.div_d(static_cast<double>(m));
    row[static_cast<std::size_t>(m)] += weight * t.to_double();
  }
}

}  // namespace bsieve
