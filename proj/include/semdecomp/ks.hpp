/*
 * Copyright 2026 The semdecomp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "semdecomp/embedding.hpp"
#include "semdecomp/error.hpp"
#include "semdecomp/parallel.hpp"
#include "semdecomp/stats.hpp"

namespace semdecomp {

inline double normal_cdf(double z) noexcept { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

// Survival function of the limiting Kolmogorov distribution, P(K > t).
inline double kolmogorov_survival(double t) noexcept {
  if (!(t > 0)) return 1.0;
  if (t < 1.18) {
    // Jacobi theta form; converges fast for small t.
    const double w = std::numbers::pi * std::numbers::pi / (8.0 * t * t);
    double cdf = 0;
    for (int k = 1; k <= 20; ++k) {
      const double m = 2.0 * k - 1.0;
      const double term = std::exp(-m * m * w);
      cdf += term;
      if (term < 1e-18) break;
    }
    cdf *= std::sqrt(2.0 * std::numbers::pi) / t;
    return std::clamp(1.0 - cdf, 0.0, 1.0);
  }
  double sf = 0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * t * t);
    sf += (k % 2 == 1) ? term : -term;
    if (term < 1e-18) break;
  }
  return std::clamp(2.0 * sf, 0.0, 1.0);
}

// Reference normal for the one-sample test: parameters fitted from the sample
// itself, or the standard normal taken as given.
enum class KsReference { fitted, standard };

struct KsResult {
  double statistic = 0;
  double p_value = 1;
};

// Sup-distance between the empirical CDF of `sample` and the reference normal
// CDF; p-value from the asymptotic Kolmogorov law at sqrt(n) * statistic.
inline KsResult ks_test_normal(std::span<const double> sample,
                               KsReference reference = KsReference::fitted) {
  const std::size_t n = sample.size();
  if (n == 0) throw InvalidArgument("KS test on an empty sample");
  double mean = 0, sd = 1;
  if (reference == KsReference::fitted) {
    const Moments m = population_moments(sample);
    mean = m.mean;
    sd = std::sqrt(m.variance);
    if (!(sd > 0)) throw DataError("KS test on a constant sample");
  }
  std::vector<double> z(sample.begin(), sample.end());
  std::sort(z.begin(), z.end());
  const double dn = static_cast<double>(n);
  double d = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = normal_cdf((z[i] - mean) / sd);
    const double above = static_cast<double>(i + 1) / dn - f;
    const double below = f - static_cast<double>(i) / dn;
    d = std::max({d, above, below});
  }
  return {d, kolmogorov_survival(std::sqrt(dn) * d)};
}

inline constexpr std::size_t kMinNormalitySamples = 50;

struct NormalityReport {
  std::vector<double> statistic;
  std::vector<double> p_value;
  std::vector<bool> normal;
  double alpha = 0.05;
  double threshold = 0.05;  // per-dimension level after correction
  KsReference reference = KsReference::fitted;

  std::size_t dims() const noexcept { return statistic.size(); }
  std::size_t normal_count() const noexcept {
    return static_cast<std::size_t>(std::count(normal.begin(), normal.end(), true));
  }
};

struct NormalityOptions {
  double alpha = 0.05;
  bool bonferroni = true;
  KsReference reference = KsReference::fitted;
};

// One-sample KS test of every dimension against a normal; a dimension is
// "normal" iff its p-value exceeds alpha / D (alpha without correction).
inline NormalityReport ks_normality(const EmbeddingMatrix& e, const NormalityOptions& options = {}) {
  if (e.rows() < kMinNormalitySamples)
    throw InvalidArgument("normality test needs at least " + std::to_string(kMinNormalitySamples) +
                          " words, got " + std::to_string(e.rows()));
  if (!(options.alpha > 0 && options.alpha < 1)) throw InvalidArgument("alpha must lie in (0, 1)");
  NormalityReport rep;
  rep.alpha = options.alpha;
  rep.reference = options.reference;
  rep.threshold = options.bonferroni ? options.alpha / static_cast<double>(e.dim()) : options.alpha;
  rep.statistic.resize(e.dim());
  rep.p_value.resize(e.dim());
  parallel_for(e.dim(), [&](std::size_t c) {
    const auto col = e.values().col(static_cast<Eigen::Index>(c));
    const KsResult r = ks_test_normal(std::span<const double>(col.data(), e.rows()), options.reference);
    rep.statistic[c] = r.statistic;
    rep.p_value[c] = r.p_value;
  });
  rep.normal.resize(e.dim());
  for (std::size_t c = 0; c < e.dim(); ++c) rep.normal[c] = rep.p_value[c] > rep.threshold;
  return rep;
}

}  // namespace semdecomp
