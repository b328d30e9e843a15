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
#include <string>
#include <vector>

#include "semdecomp/embedding.hpp"
#include "semdecomp/parallel.hpp"
#include "semdecomp/rng.hpp"

namespace semdecomp {

// Bijective base-26 name: 0 -> "a", 25 -> "z", 26 -> "aa", ...
inline std::string placeholder_token(std::size_t index) {
  std::string s;
  std::size_t n = index + 1;
  while (n > 0) {
    --n;
    s.insert(s.begin(), static_cast<char>('a' + n % 26));
    n /= 26;
  }
  return s;
}

inline VocabularyPtr placeholder_vocabulary(std::size_t size) {
  std::vector<std::string> tokens;
  tokens.reserve(size);
  for (std::size_t i = 0; i < size; ++i) tokens.push_back(placeholder_token(i));
  return make_vocabulary(std::move(tokens));
}

// Column-major storage position p holds the p-th standard normal of the
// counter stream keyed by `seed`.
inline Matrix random_normal_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  if (rows == 0 || cols == 0) throw InvalidArgument("random matrix needs positive shape");
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  double* data = m.data();
  const std::size_t total = rows * cols;
  const CounterRng gen(seed);
  const std::size_t pairs = (total + 1) / 2;
  constexpr std::size_t kBlock = 1 << 14;
  parallel_for((pairs + kBlock - 1) / kBlock, [&](std::size_t b) {
    const std::size_t hi = std::min(pairs, (b + 1) * kBlock);
    for (std::size_t p = b * kBlock; p < hi; ++p) {
      const auto [x, y] = gen.normal_pair(p);
      data[2 * p] = x;
      if (2 * p + 1 < total) data[2 * p + 1] = y;
    }
  });
  return m;
}

// V x D i.i.d. standard normal embedding. `vocab`, when given, must have V
// tokens; otherwise placeholder tokens are generated.
inline EmbeddingMatrix generate_random_embedding(std::size_t rows, std::size_t dim,
                                                 std::uint64_t seed, VocabularyPtr vocab = nullptr) {
  if (!vocab) vocab = placeholder_vocabulary(rows);
  if (vocab->size() != rows)
    throw InvalidArgument("random embedding vocabulary size does not match row count");
  return EmbeddingMatrix(std::move(vocab), random_normal_matrix(rows, dim, seed));
}

}  // namespace semdecomp
