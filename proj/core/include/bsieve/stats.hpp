#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "bsieve/special.hpp"

namespace bsieve {

// Pairwise (cascade) sum: associativity-safe, so aggregate statistics do
// not depend on the worker count that produced the array.
inline double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  std::size_t h = v.size() / 2;
  return pairwise_sum(v.first(h)) + pairwise_sum(v.subspan(h));
}

inline double sample_mean(std::span<const double> v) {
  if (v.empty()) throw std::invalid_argument("sample_mean: empty sample");
  return pairwise_sum(v) / static_cast<double>(v.size());
}

// Unbiased sample variance (n-1 in the denominator), pairwise-summed.
inline double sample_variance(std::span<const double> v) {
  if (v.size() < 2) return 0.0;
  double m = sample_mean(v);
  std::vector<double> sq(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) sq[i] = (v[i] - m) * (v[i] - m);
  return pairwise_sum(sq) / static_cast<double>(v.size() - 1);
}

// One-sample Kolmogorov-Smirnov distance against a cdf.
template <class Cdf>
double ks_distance(std::vector<double> sample, Cdf&& cdf) {
  if (sample.empty()) throw std::invalid_argument("ks_distance: empty sample");
  std::sort(sample.begin(), sample.end());
  double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    double f = cdf(sample[i]);
    d = std::max(d, std::max(f - static_cast<double>(i) / n,
                             static_cast<double>(i + 1) / n - f));
  }
  return d;
}

template <class Cdf>
double ks_test_pvalue(std::vector<double> sample, Cdf&& cdf) {
  double n = static_cast<double>(sample.size());
  double d = ks_distance(std::move(sample), cdf);
  double t = (std::sqrt(n) + 0.12 + 0.11 / std::sqrt(n)) * d;
  return kolmogorov_survival(t);
}

struct Chi2Result {
  double statistic = 0.0;
  double dof = 0.0;
  double p_value = 1.0;
};

// Two-sample chi-square homogeneity test over matched count vectors.
// Bins where both samples are empty are dropped.
inline Chi2Result chi2_two_sample(std::span<const double> counts_a,
                                  std::span<const double> counts_b) {
  if (counts_a.size() != counts_b.size())
    throw std::invalid_argument("chi2_two_sample: bin mismatch");
  double total_a = pairwise_sum(counts_a);
  double total_b = pairwise_sum(counts_b);
  if (total_a <= 0.0 || total_b <= 0.0)
    throw std::invalid_argument("chi2_two_sample: empty sample");
  double k1 = std::sqrt(total_b / total_a);
  double k2 = std::sqrt(total_a / total_b);
  Chi2Result r;
  int used = 0;
  for (std::size_t i = 0; i < counts_a.size(); ++i) {
    double a = counts_a[i], b = counts_b[i];
    if (a + b == 0.0) continue;
    double diff = k1 * a - k2 * b;
    r.statistic += diff * diff / (a + b);
    ++used;
  }
  r.dof = std::max(1, used - 1);
  r.p_value = chi2_survival(r.statistic, r.dof);
  return r;
}

}  // namespace bsieve
