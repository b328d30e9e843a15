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
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "semdecomp/categories.hpp"
#include "semdecomp/error.hpp"
#include "semdecomp/projection.hpp"
#include "semdecomp/weights.hpp"

namespace semdecomp {

enum class ReportAxis { dimension, category };

struct ReportEntry {
  std::size_t index = 0;  // category index (dimension axis) or dimension index
  std::string label;
  double weight = 0;
};

namespace detail {
inline void sort_by_magnitude(std::vector<ReportEntry>& v) {
  std::stable_sort(v.begin(), v.end(), [](const ReportEntry& a, const ReportEntry& b) {
    const double fa = std::fabs(a.weight), fb = std::fabs(b.weight);
    return fa != fb ? fa > fb : a.index < b.index;
  });
}
}  // namespace detail

// Categorical decomposition of one dimension (a row of W) or dimensional
// decomposition of one category (a column), largest magnitude first.
inline std::vector<ReportEntry> decomposition_report(const CategoryWeightMatrix& w, ReportAxis axis,
                                                     std::size_t index, std::size_t top_t) {
  std::vector<ReportEntry> out;
  if (axis == ReportAxis::dimension) {
    if (index >= w.dims())
      throw InvalidArgument("dimension " + std::to_string(index) + " out of range [0, " +
                            std::to_string(w.dims()) + ")");
    for (std::size_t j = 0; j < w.categories(); ++j)
      out.push_back({j, w.names[j], w.values(static_cast<Eigen::Index>(index), static_cast<Eigen::Index>(j))});
  } else {
    if (index >= w.categories())
      throw InvalidArgument("category " + std::to_string(index) + " out of range [0, " +
                            std::to_string(w.categories()) + ")");
    for (std::size_t i = 0; i < w.dims(); ++i)
      out.push_back({i, std::to_string(i), w.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(index))});
  }
  detail::sort_by_magnitude(out);
  if (out.size() > top_t) out.resize(top_t);
  return out;
}

struct WordCategoryScore {
  std::string category;
  double value = 0;
  bool member = false;  // the word belongs to this category
};

// A word's row of a semantic space, highest value first.
inline std::vector<WordCategoryScore> word_report(const SemanticSpace& space, const CategoryDataset& cats,
                                                  std::string_view word, std::size_t top_t) {
  const auto pos = space.vocab().find(word);
  if (!pos) throw InvalidArgument("word '" + std::string(word) + "' is not in the vocabulary");
  std::vector<std::size_t> order(space.dim());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto row = space.values().row(static_cast<Eigen::Index>(*pos));
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return row[static_cast<Eigen::Index>(a)] > row[static_cast<Eigen::Index>(b)];
  });
  std::vector<WordCategoryScore> out;
  for (std::size_t r = 0; r < order.size() && r < top_t; ++r) {
    const std::size_t j = order[r];
    bool member = false;
    for (const auto& c : cats)
      if (c.name == space.labels()[j])
        member = std::binary_search(c.words.begin(), c.words.end(), *pos);
    out.push_back({space.labels()[j], row[static_cast<Eigen::Index>(j)], member});
  }
  return out;
}

}  // namespace semdecomp
