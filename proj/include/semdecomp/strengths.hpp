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

#include "semdecomp/bhattacharyya.hpp"
#include "semdecomp/embedding.hpp"
#include "semdecomp/error.hpp"
#include "semdecomp/rng.hpp"
#include "semdecomp/weights.hpp"

namespace semdecomp {

struct CategoryStrength {
  std::string name;
  double total = 0;  // column sum of the raw Bhattacharyya weights
};

struct StrengthReport {
  std::vector<CategoryStrength> ranked;  // descending total, ties by name
  double baseline = 0;                   // mean total of random pseudo-categories
  double baseline_std = 0;               // sample std over resamples
  std::vector<double> baseline_samples;
  std::size_t baseline_words = 0;
  std::uint64_t seed = 0;
};

// Total raw weight of one word subset, summed over all dimensions.
inline double subset_strength(const BhattacharyyaScorer& scorer, std::span<const std::size_t> words) {
  double total = 0;
  for (std::size_t i = 0; i < scorer.dims(); ++i) {
    const auto [p, q] = scorer.summaries(i, words);
    total += bhattacharyya_distance(p, q).distance;
  }
  return total;
}

struct StrengthOptions {
  std::size_t baseline_words = 91;
  std::size_t resamples = 20;
  std::uint64_t seed = 0;
};

inline StrengthReport category_strengths(const CategoryWeightMatrix& w, const EmbeddingMatrix& e,
                                         const StrengthOptions& options = {}) {
  if (w.state != WeightState::raw || w.metric != WeightMetric::bhattacharyya)
    throw InvalidArgument("category strengths need raw Bhattacharyya weights");
  if (w.dims() != e.dim()) throw InvalidArgument("weights and embedding disagree on dimension");
  if (options.baseline_words < 2 || options.baseline_words + 2 > e.rows())
    throw InvalidArgument("baseline category size must lie in [2, V-2]");
  if (options.resamples < 1) throw InvalidArgument("baseline needs at least one resample");

  StrengthReport rep;
  rep.baseline_words = options.baseline_words;
  rep.seed = options.seed;
  for (std::size_t j = 0; j < w.categories(); ++j)
    rep.ranked.push_back({w.names[j], w.values.col(static_cast<Eigen::Index>(j)).sum()});
  std::sort(rep.ranked.begin(), rep.ranked.end(), [](const auto& a, const auto& b) {
    return a.total != b.total ? a.total > b.total : a.name < b.name;
  });

  const BhattacharyyaScorer scorer(e);
  rep.baseline_samples.resize(options.resamples);
  for (std::size_t r = 0; r < options.resamples; ++r) {
    Rng rng(derive_seed(options.seed, r));
    const auto words = rng.subset(e.rows(), options.baseline_words);
    rep.baseline_samples[r] = subset_strength(scorer, words);
  }
  const double n = static_cast<double>(options.resamples);
  rep.baseline = std::accumulate(rep.baseline_samples.begin(), rep.baseline_samples.end(), 0.0) / n;
  if (options.resamples > 1) {
    double ss = 0;
    for (double v : rep.baseline_samples) ss += (v - rep.baseline) * (v - rep.baseline);
    rep.baseline_std = std::sqrt(ss / (n - 1));
  }
  return rep;
}

}  // namespace semdecomp
