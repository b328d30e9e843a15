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

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "semdecomp/embedding.hpp"
#include "semdecomp/error.hpp"
#include "semdecomp/parallel.hpp"

namespace semdecomp {

// Neumaier-compensated sum over long double.
class CompensatedSum {
 public:
  void add(long double x) noexcept {
    const long double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  long double value() const noexcept { return sum_ + comp_; }

 private:
  long double sum_ = 0;
  long double comp_ = 0;
};

// Population (divide-by-n) mean and variance by the corrected two-pass
// algorithm.
struct Moments {
  double mean = 0;
  double variance = 0;
  std::size_t count = 0;
};

template <typename Range>
Moments population_moments(const Range& values) {
  Moments m;
  CompensatedSum s;
  for (double x : values) {
    s.add(x);
    ++m.count;
  }
  if (m.count == 0) return m;
  const long double n = static_cast<long double>(m.count);
  const long double mean = s.value() / n;
  CompensatedSum sq, dev;
  for (double x : values) {
    const long double d = static_cast<long double>(x) - mean;
    sq.add(d * d);
    dev.add(d);
  }
  const long double corr = dev.value();
  m.mean = static_cast<double>(mean + corr / n);
  const long double var = (sq.value() - corr * corr / n) / n;
  m.variance = static_cast<double>(var > 0 ? var : 0);
  return m;
}

// Per-dimension moments removed by standardize().
struct DimensionStats {
  std::vector<double> mean;
  std::vector<double> std;  // population standard deviation, > 0
};

inline DimensionStats dimension_stats(const EmbeddingMatrix& e) {
  DimensionStats stats;
  stats.mean.resize(e.dim());
  stats.std.resize(e.dim());
  const Matrix& v = e.values();
  for (std::size_t c = 0; c < e.dim(); ++c) {
    const auto col = v.col(static_cast<Eigen::Index>(c));
    const Moments m = population_moments(std::span<const double>(col.data(), e.rows()));
    const double sd = std::sqrt(m.variance);
    const double scale = col.cwiseAbs().maxCoeff();
    if (!(sd > 1e-13 * scale))
      throw DataError("dimension " + std::to_string(c) + " has zero variance");
    stats.mean[c] = m.mean;
    stats.std[c] = sd;
  }
  return stats;
}

struct Standardized {
  EmbeddingMatrix embedding;
  DimensionStats stats;
};

// Each dimension shifted to mean 0 and scaled to population std 1.
inline Standardized standardize(const EmbeddingMatrix& e) {
  DimensionStats stats = dimension_stats(e);
  Matrix out(e.values().rows(), e.values().cols());
  parallel_for(e.dim(), [&](std::size_t c) {
    const auto ci = static_cast<Eigen::Index>(c);
    out.col(ci) = (e.values().col(ci).array() - stats.mean[c]) / stats.std[c];
  });
  return {EmbeddingMatrix(e.vocab_ptr(), std::move(out)), std::move(stats)};
}

}  // namespace semdecomp
