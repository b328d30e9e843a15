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


#include <gtest/gtest.h>

#include "semdecomp/projection.hpp"
#include "semdecomp/random_embedding.hpp"
#include "support/fixtures.hpp"

namespace semdecomp {
namespace {

TEST(Projection, ShapeAndLabels) {
  auto m = testing::planted_model(200, 8, 3, 10, 2.0, 1);
  const auto s = interpretable_space(m.embedding, m.categories);
  EXPECT_EQ(s.rows(), 200u);
  EXPECT_EQ(s.dim(), 3u);
  EXPECT_EQ(s.labels(), m.categories.names());
  Matrix bad = Matrix::Ones(7, 3);
  EXPECT_THROW(project(m.embedding, bad, {"a", "b", "c"}), InvalidArgument);
}

TEST(Projection, MatchesExplicitProduct) {
  auto m = testing::planted_model(150, 6, 4, 8, 2.0, 2);
  const auto st = standardize(m.embedding);
  const auto w = finalize_weights(compute_weights(m.embedding, m.categories, WeightMetric::bhattacharyya));
  const auto s = interpretable_space(m.embedding, m.categories);
  for (Eigen::Index r = 0; r < 150; r += 17)
    for (Eigen::Index j = 0; j < 4; ++j) {
      double acc = 0;
      for (Eigen::Index i = 0; i < 6; ++i) acc += st.embedding.values()(r, i) * w.values(i, j);
      EXPECT_NEAR(s.values()(r, j), acc, 1e-12);
    }
  const auto c = centers_space(m.embedding, m.categories);
  const auto wc = compute_weights(m.embedding, m.categories, WeightMetric::centers);
  EXPECT_TRUE(c.values().isApprox(m.embedding.values() * wc.values, 1e-14));
}

TEST(Projection, PropertyLinearityInWeights) {
  const auto e = generate_random_embedding(80, 5, 3);
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    Matrix a = random_normal_matrix(5, 3, rng.next()), b = random_normal_matrix(5, 3, rng.next());
    const double alpha = rng.uniform() * 4 - 2, beta = rng.uniform() * 4 - 2;
    const Matrix lhs = project(e, Matrix(alpha * a + beta * b), {"x", "y", "z"}).values();
    const Matrix rhs = alpha * project(e, a, {"x", "y", "z"}).values() + beta * project(e, b, {"x", "y", "z"}).values();
    ASSERT_TRUE(lhs.isApprox(rhs, 1e-12));
  }
}

TEST(Projection, PropertyPermutingCategoriesPermutesColumns) {
  auto m = testing::planted_model(200, 8, 5, 10, 2.0, 5);
  const auto base = interpretable_space(m.embedding, m.categories);
  Rng rng(6);
  std::vector<std::size_t> perm{0, 1, 2, 3, 4};
  for (int t = 0; t < 5; ++t) {
    rng.shuffle(perm);
    std::vector<Category> cats;
    for (auto p : perm) cats.push_back(m.categories[p]);
    const auto permuted = interpretable_space(m.embedding, CategoryDataset(m.embedding.vocab_ptr(), cats));
    for (std::size_t j = 0; j < 5; ++j) {
      EXPECT_EQ(permuted.labels()[j], base.labels()[perm[j]]);
      EXPECT_TRUE(permuted.values().col(static_cast<Eigen::Index>(j)).isApprox(base.values().col(static_cast<Eigen::Index>(perm[j])), 1e-13));
    }
  }
}

TEST(Projection, SparseUsesOnlyKeptDimensions) {
  auto m = testing::planted_model(200, 10, 3, 10, 2.0, 7);
  const auto w = compute_weights(m.embedding, m.categories, WeightMetric::centers);
  const auto s = sparsify(w, 1);
  const auto p = project(m.embedding, s);
  for (std::size_t j = 0; j < 3; ++j) {
    const auto [dim, weight] = s.entries[j][0];
    EXPECT_TRUE(p.values().col(static_cast<Eigen::Index>(j)).isApprox(m.embedding.values().col(static_cast<Eigen::Index>(dim)) * weight));
  }
}

}  // namespace
}  // namespace semdecomp
