#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "jdt/errors.hpp"

namespace jdt {

// Kolmogorov-Smirnov distance between the empirical CDF of the samples and the
// uniform CDF on [0, 1].
inline double ks_uniformity(std::vector<double> samples) {
  if (samples.empty()) throw InputError("ks_uniformity on an empty sample");
  std::sort(samples.begin(), samples.end());
  const auto n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double x = std::clamp(samples[i], 0.0, 1.0);
    const double below = static_cast<double>(i) / n;
    const double above = static_cast<double>(i + 1) / n;
    d = std::max({d, above - x, x - below});
  }
  return d;
}

// Pearson statistic of observed counts against equal expected frequencies.
inline double chi_square_uniform(const std::vector<std::uint64_t>& counts) {
  if (counts.empty()) throw InputError("chi_square_uniform on no categories");
  double total = 0;
  for (auto c : counts) total += static_cast<double>(c);
  if (total == 0) throw InputError("chi_square_uniform on zero observations");
  const double expected = total / static_cast<double>(counts.size());
  double stat = 0;
  for (auto c : counts) {
    const double diff = static_cast<double>(c) - expected;
    stat += diff * diff / expected;
  }
  return stat;
}

inline double chi_square_quantile(double degrees_of_freedom, double p) {
  return boost::math::quantile(boost::math::chi_squared(degrees_of_freedom), p);
}

inline double median(std::vector<double> v) {
  if (v.empty()) throw InputError("median of an empty sample");
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

// Linear-interpolation quantile (type 7).
inline double quantile(std::vector<double> v, double p) {
  if (v.empty()) throw InputError("quantile of an empty sample");
  std::sort(v.begin(), v.end());
  const double h = (static_cast<double>(v.size()) - 1) * std::clamp(p, 0.0, 1.0);
  const auto lo = static_cast<std::size_t>(h);
  const std::size_t hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (h - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

}  // namespace jdt
