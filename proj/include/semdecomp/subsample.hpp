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
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "semdecomp/categories.hpp"
#include "semdecomp/embedding.hpp"
#include "semdecomp/error.hpp"
#include "semdecomp/rng.hpp"
#include "semdecomp/stats.hpp"

namespace semdecomp {

enum class CenterDistance { euclidean, cosine };

// Number of words kept at coverage `percent` of n: floor(percent * n / 100),
// at least 1.
inline std::size_t coverage_count(double percent, std::size_t n) {
  const double raw = percent * static_cast<double>(n) / 100.0;
  const auto kept = static_cast<std::size_t>(std::floor(raw + 1e-9));
  return std::clamp<std::size_t>(kept, 1, n);
}

// Keeps, per category, the words nearest to the category's mean vector in
// `reference`. Ties go to the lower vocabulary index.
inline CategoryDataset subsample_words(const CategoryDataset& cats, double percent,
                                       const EmbeddingMatrix& reference,
                                       CenterDistance distance = CenterDistance::euclidean) {
  if (!(percent > 0 && percent <= 100)) throw InvalidArgument("coverage must lie in (0, 100]");
  if (reference.rows() != cats.vocab().size())
    throw InvalidArgument("reference embedding and categories disagree on vocabulary");
  if (percent == 100) return cats;
  const Matrix& e = reference.values();
  std::vector<Category> out;
  out.reserve(cats.size());
  for (const auto& c : cats) {
    const std::size_t keep = coverage_count(percent, c.size());
    Eigen::VectorXd center = Eigen::VectorXd::Zero(e.cols());
    for (auto w : c.words) center += e.row(static_cast<Eigen::Index>(w)).transpose();
    center /= static_cast<double>(c.size());
    std::vector<std::pair<double, std::size_t>> scored;
    scored.reserve(c.size());
    for (auto w : c.words) {
      const auto row = e.row(static_cast<Eigen::Index>(w)).transpose();
      double dist = 0;
      if (distance == CenterDistance::euclidean) {
        dist = (row - center).squaredNorm();
      } else {
        const double denom = row.norm() * center.norm();
        dist = denom > 0 ? 1.0 - row.dot(center) / denom : 1.0;
      }
      scored.emplace_back(dist, w);
    }
    std::sort(scored.begin(), scored.end());
    Category kept{c.name, {}};
    for (std::size_t i = 0; i < keep; ++i) kept.words.push_back(scored[i].second);
    out.push_back(std::move(kept));
  }
  return CategoryDataset(cats.vocab_ptr(), std::move(out));
}

// Uniform random m-subset of the categories, original order preserved.
inline CategoryDataset subsample_categories(const CategoryDataset& cats, std::size_t m, std::uint64_t seed) {
  if (m < 1 || m > cats.size())
    throw InvalidArgument("cannot select " + std::to_string(m) + " of " + std::to_string(cats.size()) +
                          " categories");
  if (m == cats.size()) return cats;
  Rng rng(seed);
  std::vector<Category> out;
  for (auto j : rng.subset(cats.size(), m)) out.push_back(cats[j]);
  return CategoryDataset(cats.vocab_ptr(), std::move(out));
}

}  // namespace semdecomp
