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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semdecomp/bhattacharyya.hpp"
#include "semdecomp/categories.hpp"
#include "semdecomp/embedding.hpp"
#include "semdecomp/error.hpp"
#include "semdecomp/parallel.hpp"
#include "semdecomp/stats.hpp"

namespace semdecomp {

enum class WeightMetric { bhattacharyya, centers };

// Lifecycle of a weight matrix. Bhattacharyya weights go raw -> normalized ->
// sign_corrected; centers weights are produced in their final form.
enum class WeightState { raw, normalized, sign_corrected, centers };

inline std::string_view to_string(WeightMetric m) {
  return m == WeightMetric::bhattacharyya ? "bhattacharyya" : "centers";
}

inline std::string_view to_string(WeightState s) {
  switch (s) {
    case WeightState::raw: return "raw";
    case WeightState::normalized: return "normalized";
    case WeightState::sign_corrected: return "signed";
    case WeightState::centers: return "centers";
  }
  return "raw";
}

inline std::optional<WeightMetric> parse_metric(std::string_view s) {
  if (s == "bhattacharyya") return WeightMetric::bhattacharyya;
  if (s == "centers") return WeightMetric::centers;
  return std::nullopt;
}

inline std::optional<WeightState> parse_state(std::string_view s) {
  if (s == "raw") return WeightState::raw;
  if (s == "normalized") return WeightState::normalized;
  if (s == "signed") return WeightState::sign_corrected;
  if (s == "centers") return WeightState::centers;
  return std::nullopt;
}

using SignMatrix = Eigen::Matrix<std::int8_t, Eigen::Dynamic, Eigen::Dynamic>;

// D x K category weights; column j belongs to names[j].
struct CategoryWeightMatrix {
  Matrix values;
  SignMatrix signs;  // sign of (category mean - rest mean); empty for centers
  WeightState state = WeightState::raw;
  WeightMetric metric = WeightMetric::bhattacharyya;
  std::vector<std::string> names;
  std::size_t clamped_cells = 0;  // cells where a variance hit kVarianceFloor

  std::size_t dims() const noexcept { return static_cast<std::size_t>(values.rows()); }
  std::size_t categories() const noexcept { return static_cast<std::size_t>(values.cols()); }
};

// Per-dimension moments of the whole vocabulary, precomputed so that the
// summary of any word subset and its complement costs O(subset) per dimension.
class BhattacharyyaScorer {
 public:
  explicit BhattacharyyaScorer(const EmbeddingMatrix& e) : e_(e) {
    const std::size_t d = e.dim();
    mean_.resize(d);
    sum_.resize(d);
    sum_sq_.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
      const auto col = e.values().col(static_cast<Eigen::Index>(i));
      const Moments m = population_moments(std::span<const double>(col.data(), e.rows()));
      mean_[i] = m.mean;
      CompensatedSum s1, s2;
      for (Eigen::Index r = 0; r < col.size(); ++r) {
        const long double c = static_cast<long double>(col[r]) - m.mean;
        s1.add(c);
        s2.add(c * c);
      }
      sum_[i] = s1.value();
      sum_sq_[i] = s2.value();
    }
  }

  // (p, q): the words' values on dimension i, and everyone else's.
  std::pair<GaussianSummary, GaussianSummary> summaries(std::size_t dim,
                                                        std::span<const std::size_t> words) const {
    const auto col = e_.values().col(static_cast<Eigen::Index>(dim));
    const long double mu = mean_[dim];
    CompensatedSum s1, s2, direct;
    for (auto w : words) {
      const double x = col[static_cast<Eigen::Index>(w)];
      const long double c = static_cast<long double>(x) - mu;
      s1.add(c);
      s2.add(c * c);
    }
    const std::size_t n = words.size();
    const std::size_t rest = e_.rows() - n;

    // Category side: exact two-pass about its own mean.
    const long double pm_c = s1.value() / static_cast<long double>(n);
    CompensatedSum dev;
    for (auto w : words) {
      const long double d = static_cast<long double>(col[static_cast<Eigen::Index>(w)]) - mu - pm_c;
      dev.add(d * d);
    }
    GaussianSummary p{static_cast<double>(mu + pm_c),
                      static_cast<double>(dev.value() / static_cast<long double>(n)), n};

    // Complement side: from the vocabulary totals, centered at the global mean.
    const long double rn = static_cast<long double>(rest);
    const long double qm_c = (sum_[dim] - s1.value()) / rn;
    long double qv = (sum_sq_[dim] - s2.value()) / rn - qm_c * qm_c;
    if (qv < 0) qv = 0;
    GaussianSummary q{static_cast<double>(mu + qm_c), static_cast<double>(qv), rest};
    return {p, q};
  }

  std::size_t dims() const noexcept { return e_.dim(); }
  std::size_t rows() const noexcept { return e_.rows(); }

 private:
  const EmbeddingMatrix& e_;
  std::vector<double> mean_;
  std::vector<long double> sum_;
  std::vector<long double> sum_sq_;
};

namespace detail {

inline void check_binding(const EmbeddingMatrix& e, const CategoryDataset& cats) {
  if (cats.vocab_ptr() != e.vocab_ptr() && !(cats.vocab() == e.vocab()))
    throw InvalidArgument("category dataset is bound to a different vocabulary");
}

}  // namespace detail

// Raw Bhattacharyya weights plus sign matrix, or category centers.
inline CategoryWeightMatrix compute_weights(const EmbeddingMatrix& e, const CategoryDataset& cats,
                                            WeightMetric metric) {
  detail::check_binding(e, cats);
  const std::size_t d = e.dim();
  const std::size_t k = cats.size();
  CategoryWeightMatrix w;
  w.metric = metric;
  w.names = cats.names();
  w.values = Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(k));

  if (metric == WeightMetric::centers) {
    w.state = WeightState::centers;
    parallel_for(d, [&](std::size_t i) {
      const auto col = e.values().col(static_cast<Eigen::Index>(i));
      for (std::size_t j = 0; j < k; ++j) {
        CompensatedSum s;
        for (auto word : cats[j].words) s.add(col[static_cast<Eigen::Index>(word)]);
        w.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            static_cast<double>(s.value() / static_cast<long double>(cats[j].size()));
      }
    });
    return w;
  }

  for (const auto& c : cats) {
    if (c.size() < 2)
      throw DataError("category '" + c.name + "' has " + std::to_string(c.size()) +
                      " word(s); the Bhattacharyya metric needs at least 2");
    if (e.rows() - c.size() < 2)
      throw DataError("category '" + c.name + "' leaves fewer than 2 words outside it");
  }
  w.state = WeightState::raw;
  w.signs = SignMatrix::Ones(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(k));
  std::vector<std::size_t> clamped(d, 0);
  const BhattacharyyaScorer scorer(e);
  parallel_for(d, [&](std::size_t i) {
    for (std::size_t j = 0; j < k; ++j) {
      const auto [p, q] = scorer.summaries(i, cats[j].words);
      const BhattacharyyaResult r = bhattacharyya_distance(p, q);
      const auto ii = static_cast<Eigen::Index>(i);
      const auto jj = static_cast<Eigen::Index>(j);
      w.values(ii, jj) = r.distance;
      w.signs(ii, jj) = static_cast<std::int8_t>(r.sign);
      clamped[i] += r.clamped ? 1 : 0;
    }
  });
  w.clamped_cells = std::accumulate(clamped.begin(), clamped.end(), std::size_t{0});
  return w;
}

// l1-normalizes every column of a raw matrix.
inline CategoryWeightMatrix normalize_weights(CategoryWeightMatrix w) {
  if (w.state != WeightState::raw) throw InvalidArgument("normalize_weights expects raw weights");
  for (std::size_t j = 0; j < w.categories(); ++j) {
    auto col = w.values.col(static_cast<Eigen::Index>(j));
    CompensatedSum s;
    for (Eigen::Index i = 0; i < col.size(); ++i) s.add(std::fabs(col[i]));
    const double total = static_cast<double>(s.value());
    if (!(total > 0)) throw DataError("category '" + w.names[j] + "' has an all-zero weight column");
    col /= total;
  }
  w.state = WeightState::normalized;
  return w;
}

// Applies the stored encoding direction to a normalized matrix.
inline CategoryWeightMatrix sign_correct(CategoryWeightMatrix w) {
  if (w.state != WeightState::normalized)
    throw InvalidArgument("sign_correct expects normalized weights");
  if (w.signs.rows() != w.values.rows() || w.signs.cols() != w.values.cols())
    throw InvalidArgument("sign matrix missing or misshapen");
  w.values.array() *= w.signs.cast<double>().array();
  w.state = WeightState::sign_corrected;
  return w;
}

// Normalize, then sign-correct.
inline CategoryWeightMatrix finalize_weights(CategoryWeightMatrix w) {
  return sign_correct(normalize_weights(std::move(w)));
}

// Top-k entries per category by absolute value.
struct SparseWeights {
  std::size_t dims = 0;
  std::size_t k = 0;
  std::vector<std::string> names;
  WeightState state = WeightState::raw;
  WeightMetric metric = WeightMetric::bhattacharyya;
  // entries[j]: (dimension, weight) pairs in ascending dimension order
  std::vector<std::vector<std::pair<std::size_t, double>>> entries;

  std::size_t categories() const noexcept { return entries.size(); }

  Matrix dense() const {
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dims), static_cast<Eigen::Index>(entries.size()));
    for (std::size_t j = 0; j < entries.size(); ++j)
      for (const auto& [i, v] : entries[j])
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
    return m;
  }
};

// Keeps the k largest |w| per column; ties go to the lower dimension index.
inline SparseWeights sparsify(const Matrix& values, std::vector<std::string> names, std::size_t k) {
  const auto d = static_cast<std::size_t>(values.rows());
  if (k < 1 || k > d)
    throw InvalidArgument("sparsify: k=" + std::to_string(k) + " outside [1, " + std::to_string(d) + "]");
  SparseWeights s;
  s.dims = d;
  s.k = k;
  s.names = std::move(names);
  s.entries.resize(static_cast<std::size_t>(values.cols()));
  std::vector<std::size_t> order(d);
  for (Eigen::Index j = 0; j < values.cols(); ++j) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    const auto col = values.col(j);
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(),
                      [&](std::size_t a, std::size_t b) {
                        const double fa = std::fabs(col[static_cast<Eigen::Index>(a)]);
                        const double fb = std::fabs(col[static_cast<Eigen::Index>(b)]);
                        return fa != fb ? fa > fb : a < b;
                      });
    std::vector<std::size_t> kept(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(kept.begin(), kept.end());
    auto& out = s.entries[static_cast<std::size_t>(j)];
    out.reserve(k);
    for (auto i : kept) out.emplace_back(i, col[static_cast<Eigen::Index>(i)]);
  }
  return s;
}

inline SparseWeights sparsify(const CategoryWeightMatrix& w, std::size_t k) {
  SparseWeights s = sparsify(w.values, w.names, k);
  s.state = w.state;
  s.metric = w.metric;
  return s;
}

inline SparseWeights sparsify(const SparseWeights& w, std::size_t k) {
  SparseWeights s = sparsify(w.dense(), w.names, k);
  s.state = w.state;
  s.metric = w.metric;
  return s;
}

}  // namespace semdecomp
