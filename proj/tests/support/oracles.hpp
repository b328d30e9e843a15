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

// Reference implementations used as independent oracles. They favour
// directness over speed: full sorts, explicit complement vectors, literal
// set intersections.

#include <algorithm>
#include <cmath>
#include <iterator>
#include <numeric>
#include <set>
#include <vector>

#include "semdecomp/categories.hpp"
#include "semdecomp/embedding.hpp"

namespace semdecomp::testing {

inline double naive_mean(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

inline double naive_pop_variance(const std::vector<double>& v) {
  const double m = naive_mean(v);
  double s = 0;
  for (double x : v) s += (x - m) * (x - m);
  return s / static_cast<double>(v.size());
}

// Bhattacharyya distance between normals, written literally.
inline double literal_bhattacharyya(double mp, double vp, double mq, double vq) {
  return 0.25 * std::log(0.25 * (vp / vq + vq / vp + 2.0)) + 0.25 * ((mp - mq) * (mp - mq) / (vp + vq));
}

// Weight (i, j) from explicit category and complement vectors.
inline double brute_weight(const EmbeddingMatrix& e, const Category& c, std::size_t dim) {
  std::vector<double> p, q;
  std::set<std::size_t> members(c.words.begin(), c.words.end());
  for (std::size_t w = 0; w < e.rows(); ++w) {
    const double x = e.values()(static_cast<Eigen::Index>(w), static_cast<Eigen::Index>(dim));
    (members.count(w) ? p : q).push_back(x);
  }
  return literal_bhattacharyya(naive_mean(p), naive_pop_variance(p), naive_mean(q), naive_pop_variance(q));
}

struct BruteDimension {
  double score = 0;
  std::size_t category = 0;
};

// Interpretability by materialized rank lists and set intersection.
inline std::vector<BruteDimension> brute_interpretability(const Matrix& space, const CategoryDataset& cats,
                                                          int lambda) {
  const std::size_t v = static_cast<std::size_t>(space.rows());
  std::vector<BruteDimension> out;
  for (Eigen::Index i = 0; i < space.cols(); ++i) {
    std::vector<std::size_t> desc(v), asc(v);
    std::iota(desc.begin(), desc.end(), std::size_t{0});
    std::iota(asc.begin(), asc.end(), std::size_t{0});
    std::stable_sort(desc.begin(), desc.end(), [&](std::size_t a, std::size_t b) {
      return space(static_cast<Eigen::Index>(a), i) > space(static_cast<Eigen::Index>(b), i);
    });
    std::stable_sort(asc.begin(), asc.end(), [&](std::size_t a, std::size_t b) {
      return space(static_cast<Eigen::Index>(a), i) < space(static_cast<Eigen::Index>(b), i);
    });
    BruteDimension best{-1, 0};
    for (std::size_t j = 0; j < cats.size(); ++j) {
      const std::size_t n = cats[j].size();
      const std::size_t window = std::min(v, static_cast<std::size_t>(lambda) * n);
      std::set<std::size_t> top(desc.begin(), desc.begin() + static_cast<std::ptrdiff_t>(window));
      std::set<std::size_t> bottom(asc.begin(), asc.begin() + static_cast<std::ptrdiff_t>(window));
      std::set<std::size_t> s(cats[j].words.begin(), cats[j].words.end());
      std::vector<std::size_t> a, b;
      std::set_intersection(s.begin(), s.end(), top.begin(), top.end(), std::back_inserter(a));
      std::set_intersection(s.begin(), s.end(), bottom.begin(), bottom.end(), std::back_inserter(b));
      const double score = 100.0 * static_cast<double>(std::max(a.size(), b.size())) / static_cast<double>(n);
      if (score > best.score) best = {score, j};
    }
    out.push_back(best);
  }
  return out;
}

inline double brute_overall(const std::vector<BruteDimension>& dims) {
  double s = 0;
  for (const auto& d : dims) s += d.score;
  return s / static_cast<double>(dims.size());
}

}  // namespace semdecomp::testing
