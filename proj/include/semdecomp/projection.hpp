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

#include <string>
#include <vector>

#include "semdecomp/embedding.hpp"
#include "semdecomp/error.hpp"
#include "semdecomp/stats.hpp"
#include "semdecomp/weights.hpp"

namespace semdecomp {

// V x K matrix whose columns are named categories.
class SemanticSpace {
 public:
  SemanticSpace() = default;
  SemanticSpace(VocabularyPtr vocab, Matrix values, std::vector<std::string> labels)
      : vocab_(std::move(vocab)), values_(std::move(values)), labels_(std::move(labels)) {
    if (!vocab_ || static_cast<std::size_t>(values_.rows()) != vocab_->size())
      throw InvalidArgument("semantic space rows do not match the vocabulary");
    if (static_cast<std::size_t>(values_.cols()) != labels_.size())
      throw InvalidArgument("semantic space columns do not match the labels");
  }

  const Vocabulary& vocab() const noexcept { return *vocab_; }
  const VocabularyPtr& vocab_ptr() const noexcept { return vocab_; }
  const Matrix& values() const noexcept { return values_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t rows() const noexcept { return static_cast<std::size_t>(values_.rows()); }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(values_.cols()); }

 private:
  VocabularyPtr vocab_;
  Matrix values_;
  std::vector<std::string> labels_;
};

// Plain product E_in * W. The caller picks the pairing: the standardized
// embedding with sign-corrected Bhattacharyya weights, or the raw embedding
// with centers weights.
inline SemanticSpace project(const EmbeddingMatrix& e, const Matrix& weights,
                             std::vector<std::string> labels) {
  if (static_cast<std::size_t>(weights.rows()) != e.dim())
    throw InvalidArgument("projection: embedding has " + std::to_string(e.dim()) +
                          " dimensions but weights have " + std::to_string(weights.rows()) + " rows");
  Matrix out = e.values() * weights;
  return SemanticSpace(e.vocab_ptr(), std::move(out), std::move(labels));
}

inline SemanticSpace project(const EmbeddingMatrix& e, const CategoryWeightMatrix& w) {
  return project(e, w.values, w.names);
}

inline SemanticSpace project(const EmbeddingMatrix& e, const SparseWeights& w) {
  return project(e, w.dense(), w.names);
}

// The Bhattacharyya-weighted interpretable space: standardized embedding
// times finalized weights.
inline SemanticSpace interpretable_space(const EmbeddingMatrix& e, const CategoryDataset& cats) {
  const auto standardized = standardize(e);
  return project(standardized.embedding,
                 finalize_weights(compute_weights(e, cats, WeightMetric::bhattacharyya)));
}

// The centers-weighted space: raw embedding times category means.
inline SemanticSpace centers_space(const EmbeddingMatrix& e, const CategoryDataset& cats) {
  return project(e, compute_weights(e, cats, WeightMetric::centers));
}

}  // namespace semdecomp
