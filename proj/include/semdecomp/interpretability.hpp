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
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "semdecomp/categories.hpp"
#include "semdecomp/embedding.hpp"
#include "semdecomp/error.hpp"
#include "semdecomp/parallel.hpp"
#include "semdecomp/projection.hpp"

namespace semdecomp {

// Per-column rank of every word, from the top (largest value first) and from
// the bottom (smallest first). Equal values rank by lower vocabulary index in
// both directions.
class RankIndex {
 public:
  explicit RankIndex(const Matrix& values)
      : rows_(static_cast<std::size_t>(values.rows())), cols_(static_cast<std::size_t>(values.cols())) {
    top_.resize(rows_ * cols_);
    bottom_.resize(rows_ * cols_);
    parallel_for(cols_, [&](std::size_t c) {
      const auto col = values.col(static_cast<Eigen::Index>(c));
      auto at = [&](std::uint32_t w) { return col[static_cast<Eigen::Index>(w)]; };
      std::vector<std::uint32_t> order(rows_);
      std::iota(order.begin(), order.end(), std::uint32_t{0});
      std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return at(a) != at(b) ? at(a) < at(b) : a < b;
      });
      std::uint32_t* bottom = bottom_.data() + c * rows_;
      std::uint32_t* top = top_.data() + c * rows_;
      for (std::size_t r = 0; r < rows_; ++r) bottom[order[r]] = static_cast<std::uint32_t>(r);
      // Descending order: reverse, then restore ascending index inside ties.
      std::reverse(order.begin(), order.end());
      for (std::size_t b = 0; b < rows_;) {
        std::size_t e = b + 1;
        while (e < rows_ && at(order[e]) == at(order[b])) ++e;
        std::reverse(order.begin() + static_cast<std::ptrdiff_t>(b), order.begin() + static_cast<std::ptrdiff_t>(e));
        b = e;
      }
      for (std::size_t r = 0; r < rows_; ++r) top[order[r]] = static_cast<std::uint32_t>(r);
    });
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t top(std::size_t col, std::size_t word) const noexcept { return top_[col * rows_ + word]; }
  std::uint32_t bottom(std::size_t col, std::size_t word) const noexcept {
    return bottom_[col * rows_ + word];
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> top_;
  std::vector<std::uint32_t> bottom_;
};

enum class Direction { positive, negative };

struct PairScore {
  double positive = 0;  // % of category words among the dimension's top lambda*n words
  double negative = 0;  // same for the bottom window
  double best() const noexcept { return std::max(positive, negative); }
};

struct DimensionScore {
  double score = 0;
  std::size_t category = 0;  // argmax; the lowest index wins ties
  Direction direction = Direction::positive;
};

struct InterpretabilityReport {
  int lambda = 1;
  std::string space;
  std::vector<DimensionScore> dims;
  double overall = 0;  // mean of dimension scores, percent
  std::size_t clipped_pairs = 0;  // (dimension, category) pairs whose window exceeded V
};

namespace detail {

inline void check_lambdas(std::span<const int> lambdas) {
  if (lambdas.empty()) throw InvalidArgument("interpretability needs at least one lambda");
  for (int l : lambdas)
    if (l < 1) throw InvalidArgument("lambda must be a positive integer");
}

// Hit counts for every category and lambda on one column.
// counts[(j * L + l) * 2 + {0: top, 1: bottom}]
inline void column_hits(const RankIndex& ranks, std::size_t col, const CategoryDataset& cats,
                        std::span<const int> lambdas, std::vector<std::size_t>& counts,
                        std::span<std::size_t> clipped) {
  const std::size_t L = lambdas.size();
  counts.assign(cats.size() * L * 2, 0);
  const std::size_t v = ranks.rows();
  for (std::size_t j = 0; j < cats.size(); ++j) {
    const std::size_t n = cats[j].size();
    for (std::size_t l = 0; l < L; ++l)
      if (static_cast<std::size_t>(lambdas[l]) * n > v) ++clipped[l];
    for (auto w : cats[j].words) {
      const std::size_t t = ranks.top(col, w);
      const std::size_t b = ranks.bottom(col, w);
      for (std::size_t l = 0; l < L; ++l) {
        const std::size_t window = std::min(v, static_cast<std::size_t>(lambdas[l]) * n);
        counts[(j * L + l) * 2] += t < window;
        counts[(j * L + l) * 2 + 1] += b < window;
      }
    }
  }
}

}  // namespace detail

// IS+ and IS- for every (dimension, category) pair at one lambda; [i][j].
inline std::vector<std::vector<PairScore>> pair_scores(const RankIndex& ranks, const CategoryDataset& cats,
                                                       int lambda) {
  const int lambdas[] = {lambda};
  detail::check_lambdas(lambdas);
  std::vector<std::vector<PairScore>> out(ranks.cols(), std::vector<PairScore>(cats.size()));
  std::vector<std::size_t> counts;
  std::size_t clipped = 0;
  for (std::size_t i = 0; i < ranks.cols(); ++i) {
    detail::column_hits(ranks, i, cats, lambdas, counts, std::span<std::size_t>(&clipped, 1));
    for (std::size_t j = 0; j < cats.size(); ++j) {
      const double n = static_cast<double>(cats[j].size());
      out[i][j] = {100.0 * static_cast<double>(counts[j * 2]) / n,
                   100.0 * static_cast<double>(counts[j * 2 + 1]) / n};
    }
  }
  return out;
}

// Automated interpretability score, one report per lambda (in input order).
inline std::vector<InterpretabilityReport> interpretability_scores(const RankIndex& ranks,
                                                                   const CategoryDataset& cats,
                                                                   std::span<const int> lambdas,
                                                                   const std::string& label = "") {
  detail::check_lambdas(lambdas);
  if (ranks.rows() != cats.vocab().size())
    throw InvalidArgument("space and category dataset disagree on vocabulary size");
  const std::size_t L = lambdas.size();
  const std::size_t d = ranks.cols();
  std::vector<InterpretabilityReport> reports(L);
  for (std::size_t l = 0; l < L; ++l) {
    reports[l].lambda = lambdas[l];
    reports[l].space = label;
    reports[l].dims.resize(d);
  }
  std::vector<std::size_t> clipped(d * L, 0);
  parallel_for(d, [&](std::size_t i) {
    std::vector<std::size_t> counts;
    detail::column_hits(ranks, i, cats, lambdas, counts, std::span<std::size_t>(clipped).subspan(i * L, L));
    for (std::size_t l = 0; l < L; ++l) {
      DimensionScore best;
      best.score = -1;
      for (std::size_t j = 0; j < cats.size(); ++j) {
        const double n = static_cast<double>(cats[j].size());
        const double pos = 100.0 * static_cast<double>(counts[(j * L + l) * 2]) / n;
        const double neg = 100.0 * static_cast<double>(counts[(j * L + l) * 2 + 1]) / n;
        const double s = std::max(pos, neg);
        if (s > best.score) best = {s, j, pos >= neg ? Direction::positive : Direction::negative};
      }
      reports[l].dims[i] = best;
    }
  });
  for (std::size_t l = 0; l < L; ++l) {
    auto& r = reports[l];
    double total = 0;
    for (const auto& s : r.dims) total += s.score;
    r.overall = d ? total / static_cast<double>(d) : 0.0;
    for (std::size_t i = 0; i < d; ++i) r.clipped_pairs += clipped[i * L + l];
  }
  return reports;
}

inline std::vector<InterpretabilityReport> interpretability_scores(const Matrix& space,
                                                                   const CategoryDataset& cats,
                                                                   std::span<const int> lambdas,
                                                                   const std::string& label = "") {
  return interpretability_scores(RankIndex(space), cats, lambdas, label);
}

inline std::vector<InterpretabilityReport> interpretability_scores(const EmbeddingMatrix& e,
                                                                   const CategoryDataset& cats,
                                                                   std::span<const int> lambdas,
                                                                   const std::string& label = "") {
  return interpretability_scores(e.values(), cats, lambdas, label);
}

inline std::vector<InterpretabilityReport> interpretability_scores(const SemanticSpace& s,
                                                                   const CategoryDataset& cats,
                                                                   std::span<const int> lambdas,
                                                                   const std::string& label = "") {
  return interpretability_scores(s.values(), cats, lambdas, label);
}

}  // namespace semdecomp
