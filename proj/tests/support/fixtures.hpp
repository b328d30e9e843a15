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

// Synthetic embeddings and category datasets shared by the unit and
// acceptance suites.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "semdecomp/categories.hpp"
#include "semdecomp/embedding.hpp"
#include "semdecomp/ks.hpp"
#include "semdecomp/random_embedding.hpp"
#include "semdecomp/rng.hpp"

namespace semdecomp::testing {

// Standard-normal matrix in which the words of category j are shifted by
// `shift` on dimension planted[j]. Categories are disjoint.
struct PlantedModel {
  EmbeddingMatrix embedding;
  CategoryDataset categories;
  std::vector<std::size_t> planted;  // planted dimension per category
};

inline PlantedModel planted_model(std::size_t v, std::size_t d, std::size_t k, std::size_t words_per_category,
                                  double shift, std::uint64_t seed,
                                  std::uint64_t structure_seed = 0x5EED) {
  Rng structure(structure_seed);
  std::vector<std::size_t> dims(d);
  for (std::size_t i = 0; i < d; ++i) dims[i] = i;
  structure.shuffle(dims);
  std::vector<std::size_t> words(v);
  for (std::size_t i = 0; i < v; ++i) words[i] = i;
  structure.shuffle(words);

  auto vocab = placeholder_vocabulary(v);
  Matrix m = random_normal_matrix(v, d, seed);
  std::vector<Category> cats;
  PlantedModel out;
  for (std::size_t j = 0; j < k; ++j) {
    Category c{"planted_" + std::to_string(j), {}};
    for (std::size_t t = 0; t < words_per_category; ++t) c.words.push_back(words[j * words_per_category + t]);
    for (auto w : c.words) m(static_cast<Eigen::Index>(w), static_cast<Eigen::Index>(dims[j])) += shift;
    out.planted.push_back(dims[j]);
    cats.push_back(std::move(c));
  }
  out.embedding = EmbeddingMatrix(vocab, std::move(m));
  out.categories = CategoryDataset(vocab, std::move(cats));
  return out;
}

// Each category is encoded on `dims_per_category` dimensions with shifts of
// +-strength * sigma_i, on top of dimensions that carry their own offsets
// and scales (as trained embeddings do). Words may belong to one category.
inline PlantedModel heterogeneous_model(std::size_t v, std::size_t d, std::size_t k,
                                        std::size_t words_per_category, std::size_t dims_per_category,
                                        double strength, std::uint64_t seed) {
  Rng rng(derive_seed(seed, 1));
  std::vector<double> offset(d), scale(d);
  for (std::size_t i = 0; i < d; ++i) {
    offset[i] = 2.0 * (rng.uniform() - 0.5);
    scale[i] = 0.3 + 1.2 * rng.uniform();
  }
  Matrix m = random_normal_matrix(v, d, seed);
  for (std::size_t i = 0; i < d; ++i) {
    auto col = m.col(static_cast<Eigen::Index>(i));
    col = (col.array() * scale[i] + offset[i]).matrix();
  }
  std::vector<std::size_t> words(v);
  for (std::size_t i = 0; i < v; ++i) words[i] = i;
  rng.shuffle(words);
  auto vocab = placeholder_vocabulary(v);
  std::vector<Category> cats;
  PlantedModel out;
  for (std::size_t j = 0; j < k; ++j) {
    Category c{"category_" + std::to_string(j), {}};
    for (std::size_t t = 0; t < words_per_category; ++t) c.words.push_back(words[j * words_per_category + t]);
    const auto chosen = rng.subset(d, dims_per_category);
    for (std::size_t q = 0; q < chosen.size(); ++q) {
      const std::size_t dim = chosen[q];
      const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
      const double s = sign * strength * scale[dim] / static_cast<double>(q + 1);
      for (auto w : c.words) m(static_cast<Eigen::Index>(w), static_cast<Eigen::Index>(dim)) += s;
    }
    out.planted.push_back(chosen.front());
    cats.push_back(std::move(c));
  }
  out.embedding = EmbeddingMatrix(vocab, std::move(m));
  out.categories = CategoryDataset(vocab, std::move(cats));
  return out;
}

inline double inverse_normal_cdf(double p) {
  double lo = -40, hi = 40;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (normal_cdf(mid) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Category sizes at the K quantile midpoints of a lognormal with the given
// mean and standard deviation, rounded, with a floor of 2.
inline std::vector<std::size_t> lognormal_sizes(std::size_t k, double mean, double sd) {
  const double s2 = std::log(1.0 + (sd / mean) * (sd / mean));
  const double mu = std::log(mean) - s2 / 2.0;
  std::vector<std::size_t> sizes;
  for (std::size_t q = 0; q < k; ++q) {
    const double z = inverse_normal_cdf((static_cast<double>(q) + 0.5) / static_cast<double>(k));
    sizes.push_back(std::max<std::size_t>(2, static_cast<std::size_t>(std::lround(std::exp(mu + std::sqrt(s2) * z)))));
  }
  return sizes;
}

// Stand-in for the real category dataset with its summary statistics:
// 110 categories, mean size 91, size sd 56, 6559 distinct words, bound to
// `vocab`. Word identities are arbitrary, which is immaterial for spaces
// that carry no lexical information (random embeddings).
inline CategoryDataset surrogate_dataset(const VocabularyPtr& vocab, std::uint64_t seed, std::size_t k = 110,
                                         double mean = 91, double sd = 56, std::size_t unique_words = 6559) {
  Rng rng(seed);
  const auto sizes = lognormal_sizes(k, mean, sd);
  auto pool = rng.subset(vocab->size(), std::min(unique_words, vocab->size()));
  rng.shuffle(pool);
  std::vector<std::size_t> order(k);
  for (std::size_t j = 0; j < k; ++j) order[j] = j;
  rng.shuffle(order);
  std::vector<Category> cats(k);
  std::size_t cursor = 0;
  for (std::size_t j : order) {
    auto& c = cats[j];
    char name[32];
    std::snprintf(name, sizeof name, "category_%03zu", j);
    c.name = name;
    while (c.words.size() < sizes[j]) {
      const std::size_t w = pool[cursor++ % pool.size()];
      if (std::find(c.words.begin(), c.words.end(), w) == c.words.end()) c.words.push_back(w);
    }
  }
  return CategoryDataset(vocab, std::move(cats));
}

}  // namespace semdecomp::testing
