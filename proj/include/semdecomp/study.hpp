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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "semdecomp/categories.hpp"
#include "semdecomp/embedding.hpp"
#include "semdecomp/error.hpp"
#include "semdecomp/interpretability.hpp"
#include "semdecomp/projection.hpp"
#include "semdecomp/rng.hpp"
#include "semdecomp/subsample.hpp"

namespace semdecomp {

// How a study space is obtained. Fixed spaces are scored as given; the two
// category-defined spaces are rebuilt from `source` for every subsampled
// dataset, since their columns are the categories themselves.
enum class StudySpaceKind { fixed, bhattacharyya, centers };

struct StudySpace {
  std::string label;
  StudySpaceKind kind = StudySpaceKind::fixed;
  const EmbeddingMatrix* source = nullptr;
};

struct StudyOptions {
  std::vector<double> coverage = {40, 60, 80, 100};
  std::vector<std::size_t> category_counts = {30, 50, 70, 90, 110};
  std::size_t repeats = 10;
  int lambda = 5;
  std::uint64_t seed = 0;
  CenterDistance distance = CenterDistance::euclidean;
};

struct StudyCell {
  std::string space;
  double coverage = 0;
  std::size_t categories = 0;
  double mean_is = 0;
  std::vector<double> samples;  // one overall IS per category draw
};

struct SubsampleStudyReport {
  StudyOptions options;
  std::vector<StudyCell> cells;  // space-major, then coverage, then count

  const StudyCell* find(const std::string& space, double coverage, std::size_t m) const {
    for (const auto& c : cells)
      if (c.space == space && c.coverage == coverage && c.categories == m) return &c;
    return nullptr;
  }
};

// Seed of the category draw for grid cell (r_index, m_index), repetition rep.
inline std::uint64_t study_draw_seed(std::uint64_t seed, std::size_t r_index, std::size_t m_index,
                                     std::size_t rep) {
  return derive_seed(derive_seed(seed, r_index, m_index), rep);
}

inline SubsampleStudyReport subsample_study(const std::vector<StudySpace>& spaces, const CategoryDataset& cats,
                                            const EmbeddingMatrix& reference, const StudyOptions& options) {
  if (spaces.empty() || options.coverage.empty() || options.category_counts.empty())
    throw InvalidArgument("study grids and space list must be non-empty");
  if (options.repeats < 1) throw InvalidArgument("study needs at least one repetition");
  for (const auto& s : spaces)
    if (!s.source) throw InvalidArgument("study space '" + s.label + "' has no source matrix");

  std::vector<std::unique_ptr<RankIndex>> fixed_ranks(spaces.size());
  for (std::size_t s = 0; s < spaces.size(); ++s)
    if (spaces[s].kind == StudySpaceKind::fixed) fixed_ranks[s] = std::make_unique<RankIndex>(spaces[s].source->values());

  std::vector<std::unique_ptr<EmbeddingMatrix>> standardized(spaces.size());
  for (std::size_t s = 0; s < spaces.size(); ++s)
    if (spaces[s].kind == StudySpaceKind::bhattacharyya)
      standardized[s] = std::make_unique<EmbeddingMatrix>(standardize(*spaces[s].source).embedding);

  const int lambdas[] = {options.lambda};
  SubsampleStudyReport report;
  report.options = options;
  std::vector<std::vector<StudyCell>> per_space(spaces.size());
  for (std::size_t ri = 0; ri < options.coverage.size(); ++ri) {
    const CategoryDataset covered = subsample_words(cats, options.coverage[ri], reference, options.distance);
    for (std::size_t mi = 0; mi < options.category_counts.size(); ++mi) {
      const std::size_t m = options.category_counts[mi];
      std::vector<StudyCell> cells(spaces.size());
      for (std::size_t s = 0; s < spaces.size(); ++s)
        cells[s] = {spaces[s].label, options.coverage[ri], m, 0.0, {}};
      for (std::size_t rep = 0; rep < options.repeats; ++rep) {
        const CategoryDataset drawn = subsample_categories(covered, m, study_draw_seed(options.seed, ri, mi, rep));
        for (std::size_t s = 0; s < spaces.size(); ++s) {
          double is = 0;
          switch (spaces[s].kind) {
            case StudySpaceKind::fixed:
              is = interpretability_scores(*fixed_ranks[s], drawn, lambdas, spaces[s].label)[0].overall;
              break;
            case StudySpaceKind::bhattacharyya:
              is = interpretability_scores(
                       project(*standardized[s],
                               finalize_weights(compute_weights(*spaces[s].source, drawn,
                                                                WeightMetric::bhattacharyya))),
                       drawn, lambdas)[0].overall;
              break;
            case StudySpaceKind::centers:
              is = interpretability_scores(centers_space(*spaces[s].source, drawn), drawn, lambdas)[0].overall;
              break;
          }
          cells[s].samples.push_back(is);
        }
      }
      for (std::size_t s = 0; s < spaces.size(); ++s) {
        double total = 0;
        for (double v : cells[s].samples) total += v;
        cells[s].mean_is = total / static_cast<double>(cells[s].samples.size());
        per_space[s].push_back(std::move(cells[s]));
      }
    }
  }
  for (auto& v : per_space)
    for (auto& c : v) report.cells.push_back(std::move(c));
  return report;
}

}  // namespace semdecomp
