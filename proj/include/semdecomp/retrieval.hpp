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
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "semdecomp/categories.hpp"
#include "semdecomp/embedding.hpp"
#include "semdecomp/error.hpp"
#include "semdecomp/log.hpp"
#include "semdecomp/projection.hpp"
#include "semdecomp/rng.hpp"
#include "semdecomp/stats.hpp"
#include "semdecomp/weights.hpp"

namespace semdecomp {

inline constexpr std::array<std::size_t, 3> kRetrievalMultipliers = {1, 3, 5};

struct CategorySplit {
  std::vector<std::size_t> train;  // ascending
  std::vector<std::size_t> test;   // ascending
};

struct SplitPlan {
  std::vector<CategorySplit> categories;  // aligned with the dataset
  std::uint64_t seed = 0;
  std::size_t repetition = 0;
};

// |train| = round-half-up(fraction * n).
inline std::size_t train_count(double fraction, std::size_t n) {
  return std::min(n, static_cast<std::size_t>(std::floor(fraction * static_cast<double>(n) + 0.5 + 1e-9)));
}

inline SplitPlan make_split(const CategoryDataset& cats, double fraction, std::uint64_t seed,
                            std::size_t repetition = 0) {
  if (!(fraction > 0 && fraction < 1)) throw InvalidArgument("split fraction must lie in (0, 1)");
  SplitPlan plan;
  plan.seed = seed;
  plan.repetition = repetition;
  for (std::size_t j = 0; j < cats.size(); ++j) {
    std::vector<std::size_t> words = cats[j].words;
    Rng rng(derive_seed(seed, j));
    rng.shuffle(words);
    const std::size_t t = train_count(fraction, words.size());
    CategorySplit split{{words.begin(), words.begin() + static_cast<std::ptrdiff_t>(t)},
                        {words.begin() + static_cast<std::ptrdiff_t>(t), words.end()}};
    std::sort(split.train.begin(), split.train.end());
    std::sort(split.test.begin(), split.test.end());
    plan.categories.push_back(std::move(split));
  }
  return plan;
}

// Test-word hits inside the top m*n ranks of `column` for each multiplier
// m, where n = |test| and the ranking excludes `train`. Ranks are by
// descending value, ties to the lower vocabulary index.
inline std::array<std::size_t, 3> retrieval_hits(std::span<const double> column,
                                                 std::span<const std::size_t> train,
                                                 std::span<const std::size_t> test,
                                                 std::vector<char>& scratch) {
  const std::size_t v = column.size();
  scratch.assign(v, 0);
  for (auto w : train) scratch[w] = 1;
  for (auto w : test) scratch[w] = 2;
  std::vector<std::uint32_t> cand;
  cand.reserve(v - train.size());
  for (std::size_t w = 0; w < v; ++w)
    if (scratch[w] != 1) cand.push_back(static_cast<std::uint32_t>(w));
  const std::size_t n = test.size();
  const std::size_t window = std::min(cand.size(), kRetrievalMultipliers.back() * n);
  auto before = [&](std::uint32_t a, std::uint32_t b) {
    return column[a] != column[b] ? column[a] > column[b] : a < b;
  };
  std::nth_element(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(window), cand.end(), before);
  std::sort(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(window), before);
  std::array<std::size_t, 3> hits{};
  std::size_t running = 0, pos = 0;
  for (std::size_t mi = 0; mi < kRetrievalMultipliers.size(); ++mi) {
    const std::size_t limit = std::min(window, kRetrievalMultipliers[mi] * n);
    for (; pos < limit; ++pos) running += scratch[cand[pos]] == 2;
    hits[mi] = running;
  }
  return hits;
}

// How the Bhattacharyya weights enter the projection: finalized
// (normalized and sign-corrected) or raw distances.
enum class BhattacharyyaVariant { finalized, raw };

struct RetrievalOptions {
  std::vector<std::size_t> ks = {5, 7, 10, 15, 25, 50, 100, 200, 300};
  std::size_t repeats = 10;
  double split = 0.6;
  std::uint64_t seed = 0;
  WeightMetric metric = WeightMetric::bhattacharyya;
  BhattacharyyaVariant variant = BhattacharyyaVariant::finalized;
};

struct RetrievalCell {
  std::size_t k = 0;
  std::size_t multiplier = 1;
  double mean_accuracy = 0;  // percent
  double std_accuracy = 0;   // sample std over repetitions
  std::vector<double> per_repetition;
};

struct RetrievalReport {
  RetrievalOptions options;
  std::vector<RetrievalCell> cells;  // k-major, multipliers 1, 3, 5
  std::vector<std::string> skipped;  // categories left out of the weighting

  const RetrievalCell& at(std::size_t k, std::size_t multiplier) const {
    for (const auto& c : cells)
      if (c.k == k && c.multiplier == multiplier) return c;
    throw InvalidArgument("no retrieval cell for k=" + std::to_string(k));
  }
};

// Weighted accuracies of one repetition, [k index][multiplier index].
inline std::vector<std::array<double, 3>> retrieval_repetition(const EmbeddingMatrix& e,
                                                               const EmbeddingMatrix& standardized,
                                                               const CategoryDataset& cats,
                                                               const SplitPlan& plan,
                                                               const RetrievalOptions& options,
                                                               std::set<std::string>& skipped) {
  const std::size_t min_train = options.metric == WeightMetric::bhattacharyya ? 2 : 1;
  std::vector<Category> train_cats;
  std::vector<std::size_t> used;
  for (std::size_t j = 0; j < cats.size(); ++j) {
    const auto& s = plan.categories[j];
    if (s.test.size() < 2 || s.train.size() < min_train) {
      skipped.insert(cats[j].name);
      continue;
    }
    train_cats.push_back({cats[j].name, s.train});
    used.push_back(j);
  }
  if (used.empty()) throw DataError("retrieval: no category has enough words to split");
  const CategoryDataset train(cats.vocab_ptr(), std::move(train_cats));

  CategoryWeightMatrix w = compute_weights(e, train, options.metric);
  const EmbeddingMatrix* base = &e;
  if (options.metric == WeightMetric::bhattacharyya) {
    base = &standardized;
    if (options.variant == BhattacharyyaVariant::finalized) w = finalize_weights(std::move(w));
  }

  std::vector<std::array<double, 3>> out;
  std::vector<char> scratch;
  for (auto k : options.ks) {
    const SemanticSpace space = project(*base, sparsify(w, k));
    std::array<std::size_t, 3> hits{};
    std::size_t total = 0;
    for (std::size_t u = 0; u < used.size(); ++u) {
      const auto& s = plan.categories[used[u]];
      const auto col = space.values().col(static_cast<Eigen::Index>(u));
      const auto h = retrieval_hits(std::span<const double>(col.data(), space.rows()), s.train, s.test, scratch);
      for (std::size_t m = 0; m < 3; ++m) hits[m] += h[m];
      total += s.test.size();
    }
    std::array<double, 3> acc{};
    for (std::size_t m = 0; m < 3; ++m) acc[m] = 100.0 * static_cast<double>(hits[m]) / static_cast<double>(total);
    out.push_back(acc);
  }
  return out;
}

// Category word retrieval: weights from a random training split of each
// category, sparsified to the top k per category, projected; held-out words
// are searched for in the top n, 3n, 5n of their category's column.
inline RetrievalReport retrieval_test(const EmbeddingMatrix& e, const CategoryDataset& cats,
                                      const RetrievalOptions& options) {
  if (options.ks.empty()) throw InvalidArgument("retrieval needs at least one k");
  if (!(options.split > 0 && options.split < 1)) throw InvalidArgument("split fraction must lie in (0, 1)");
  if (options.repeats < 1) throw InvalidArgument("retrieval needs at least one repetition");
  for (auto k : options.ks)
    if (k < 1 || k > e.dim())
      throw InvalidArgument("k=" + std::to_string(k) + " outside [1, " + std::to_string(e.dim()) + "]");

  const EmbeddingMatrix standardized = options.metric == WeightMetric::bhattacharyya
                                           ? standardize(e).embedding
                                           : EmbeddingMatrix{};
  std::set<std::string> skipped;
  std::vector<std::vector<std::array<double, 3>>> reps;
  for (std::size_t r = 0; r < options.repeats; ++r) {
    const SplitPlan plan = make_split(cats, options.split, derive_seed(options.seed, r), r);
    reps.push_back(retrieval_repetition(e, standardized, cats, plan, options, skipped));
  }

  RetrievalReport report;
  report.options = options;
  report.skipped.assign(skipped.begin(), skipped.end());
  if (!skipped.empty())
    warn("retrieval: skipped " + std::to_string(skipped.size()) + " category(ies) with too few words to split");
  for (std::size_t ki = 0; ki < options.ks.size(); ++ki) {
    for (std::size_t m = 0; m < 3; ++m) {
      RetrievalCell cell;
      cell.k = options.ks[ki];
      cell.multiplier = kRetrievalMultipliers[m];
      for (const auto& rep : reps) cell.per_repetition.push_back(rep[ki][m]);
      const double n = static_cast<double>(cell.per_repetition.size());
      double sum = 0;
      for (double v : cell.per_repetition) sum += v;
      cell.mean_accuracy = sum / n;
      if (n > 1) {
        double ss = 0;
        for (double v : cell.per_repetition) ss += (v - cell.mean_accuracy) * (v - cell.mean_accuracy);
        cell.std_accuracy = std::sqrt(ss / (n - 1));
      }
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

}  // namespace semdecomp
