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

#include <cmath>
#include <vector>

#include "semdecomp/random_embedding.hpp"
#include "semdecomp/stats.hpp"
#include "support/oracles.hpp"

namespace semdecomp {
namespace {

TEST(Stats, PopulationMomentsSmall) {
  const std::vector<double> v{1, 2, 3, 4};
  const auto m = population_moments(v);
  EXPECT_DOUBLE_EQ(m.mean, 2.5);
  EXPECT_DOUBLE_EQ(m.variance, 1.25);
  EXPECT_EQ(m.count, 4u);
  EXPECT_EQ(population_moments(std::vector<double>{}).count, 0u);
}

TEST(Stats, MomentsSurviveLargeOffset) {
  std::vector<double> v;
  for (int i = 0; i < 1000; ++i) v.push_back(1e9 + (i % 2 ? 1.0 : -1.0));
  const auto m = population_moments(v);
  EXPECT_NEAR(m.mean, 1e9, 1e-6);
  EXPECT_NEAR(m.variance, 1.0, 1e-9);
}

TEST(Stats, CompensatedSumRecoversSmallTerms) {
  CompensatedSum s;
  s.add(1e20);
  for (int i = 0; i < 1000; ++i) s.add(1.0);
  s.add(-1e20);
  EXPECT_EQ(static_cast<double>(s.value()), 1000.0);
}

TEST(Stats, StandardizeSpecExample) {
  auto v = make_vocabulary({"a", "b", "c"});
  Matrix m(3, 1);
  m << 1, 2, 3;
  const auto s = standardize(EmbeddingMatrix(v, m));
  EXPECT_NEAR(s.embedding.values()(0, 0), -1.224745, 1e-6);
  EXPECT_NEAR(s.embedding.values()(1, 0), 0.0, 1e-15);
  EXPECT_NEAR(s.embedding.values()(2, 0), 1.224745, 1e-6);
  EXPECT_DOUBLE_EQ(s.stats.mean[0], 2.0);
  EXPECT_NEAR(s.stats.std[0], std::sqrt(2.0 / 3.0), 1e-15);
}

TEST(Stats, StandardizedColumnsHaveZeroMeanUnitVariance) {
  Matrix m = random_normal_matrix(500, 6, 4);
  for (Eigen::Index c = 0; c < 6; ++c) m.col(c) = (m.col(c).array() * (c + 0.5) + 10.0 * c).matrix();
  const auto s = standardize(EmbeddingMatrix(placeholder_vocabulary(500), m));
  for (Eigen::Index c = 0; c < 6; ++c) {
    std::vector<double> col(s.embedding.values().col(c).data(), s.embedding.values().col(c).data() + 500);
    EXPECT_NEAR(testing::naive_mean(col), 0.0, 1e-12);
    EXPECT_NEAR(testing::naive_pop_variance(col), 1.0, 1e-12);
  }
}

TEST(Stats, ZeroVarianceDimensionIsNamed) {
  Matrix m = random_normal_matrix(10, 3, 1);
  m.col(1).setConstant(4.2);
  try {
    standardize(EmbeddingMatrix(placeholder_vocabulary(10), m));
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("dimension 1"), std::string::npos);
  }
}

}  // namespace
}  // namespace semdecomp
