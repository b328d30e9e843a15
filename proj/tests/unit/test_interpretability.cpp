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

#include "semdecomp/interpretability.hpp"
#include "semdecomp/random_embedding.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace semdecomp {
namespace {

struct Instance {
  VocabularyPtr vocab;
  Matrix space;
  CategoryDataset cats;
};

// Small random instance; coarse values produce plenty of rank ties.
Instance random_instance(Rng& rng, bool coarse) {
  const std::size_t v = 20 + rng.below(181), d = 1 + rng.below(10), k = 1 + rng.below(5);
  Instance in;
  in.vocab = placeholder_vocabulary(v);
  in.space = Matrix(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(d));
  for (Eigen::Index i = 0; i < in.space.size(); ++i)
    in.space.data()[i] = coarse ? static_cast<double>(rng.below(5)) : rng.uniform();
  std::vector<Category> cats;
  for (std::size_t j = 0; j < k; ++j)
    cats.push_back({"c" + std::to_string(j), rng.subset(v, 1 + rng.below(std::min<std::size_t>(v, 60)))});
  in.cats = CategoryDataset(in.vocab, cats);
  return in;
}

TEST(Interpretability, IndicatorSpaceScoresHundred) {
  const std::size_t v = 100;
  auto vocab = placeholder_vocabulary(v);
  CategoryDataset cats(vocab, {{"a", {0, 5, 9}}, {"b", {50, 51, 52, 53}}, {"c", {99}}});
  Matrix m = Matrix::Zero(v, 3);
  for (std::size_t j = 0; j < 3; ++j)
    for (auto w : cats[j].words) m(static_cast<Eigen::Index>(w), static_cast<Eigen::Index>(j)) = 1.0;
  const int lambdas[] = {1};
  const auto rep = interpretability_scores(m, cats, lambdas);
  EXPECT_DOUBLE_EQ(rep[0].overall, 100.0);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(rep[0].dims[i].category, i);
}

TEST(Interpretability, RankTiesGoToLowerIndex) {
  Matrix m(5, 1);
  m << 1, 2, 2, 0, 2;
  const RankIndex r(m);
  EXPECT_EQ(r.top(0, 1), 0u);
  EXPECT_EQ(r.top(0, 2), 1u);
  EXPECT_EQ(r.top(0, 4), 2u);
  EXPECT_EQ(r.top(0, 0), 3u);
  EXPECT_EQ(r.top(0, 3), 4u);
  EXPECT_EQ(r.bottom(0, 3), 0u);
  EXPECT_EQ(r.bottom(0, 0), 1u);
  EXPECT_EQ(r.bottom(0, 1), 2u);
  EXPECT_EQ(r.bottom(0, 4), 4u);
}

TEST(Interpretability, HandComputedPairScores) {
  Matrix m(6, 1);
  m << 6, 5, 4, 3, 2, 1;
  auto vocab = placeholder_vocabulary(6);
  CategoryDataset cats(vocab, {{"top", {0, 2}}, {"bottom", {4, 5}}});
  const RankIndex r(m);
  const auto ps = pair_scores(r, cats, 1);
  EXPECT_DOUBLE_EQ(ps[0][0].positive, 50.0);   // top-2 = {0,1}
  EXPECT_DOUBLE_EQ(ps[0][0].negative, 0.0);
  EXPECT_DOUBLE_EQ(ps[0][1].negative, 100.0);  // bottom-2 = {5,4}
  const int lambdas[] = {1, 2};
  const auto rep = interpretability_scores(r, cats, lambdas);
  EXPECT_DOUBLE_EQ(rep[0].dims[0].score, 100.0);
  EXPECT_EQ(rep[0].dims[0].category, 1u);
  EXPECT_EQ(rep[0].dims[0].direction, Direction::negative);
  EXPECT_DOUBLE_EQ(rep[1].dims[0].score, 100.0);
  EXPECT_EQ(rep[1].dims[0].category, 0u);  // tie at 100: lower index
}

TEST(Interpretability, ClippedWindowsAreCounted) {
  Matrix m = random_normal_matrix(10, 2, 1);
  CategoryDataset cats(placeholder_vocabulary(10), {{"a", {0, 1, 2, 3}}, {"b", {4}}});
  const int lambdas[] = {2, 3};
  const auto rep = interpretability_scores(m, cats, lambdas);
  EXPECT_EQ(rep[0].clipped_pairs, 0u);
  EXPECT_EQ(rep[1].clipped_pairs, 2u);  // 3*4 > 10 on each of 2 dimensions
  EXPECT_DOUBLE_EQ(rep[1].dims[0].score, 100.0);
  const int none[] = {1};
  EXPECT_EQ(interpretability_scores(m, cats, none)[0].clipped_pairs, 0u);
  EXPECT_THROW(interpretability_scores(m, cats, std::span<const int>{}), InvalidArgument);
  const int zero[] = {0};
  EXPECT_THROW(interpretability_scores(m, cats, zero), InvalidArgument);
}

TEST(Interpretability, PropertyOracleEquivalence) {
  Rng rng(1234);
  for (int t = 0; t < 150; ++t) {
    const auto in = random_instance(rng, t % 2 == 0);
    const int lambda = 1 + static_cast<int>(rng.below(10));
    const int lambdas[] = {lambda};
    const auto rep = interpretability_scores(in.space, in.cats, lambdas)[0];
    const auto ref = testing::brute_interpretability(in.space, in.cats, lambda);
    ASSERT_EQ(rep.dims.size(), ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
      ASSERT_EQ(rep.dims[i].score, ref[i].score) << "trial " << t << " dim " << i;
      ASSERT_EQ(rep.dims[i].category, ref[i].category);
    }
    ASSERT_EQ(rep.overall, testing::brute_overall(ref));
  }
}

TEST(Interpretability, PropertyMonotoneInLambdaPerDimension) {
  Rng rng(55);
  const int lambdas[] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  for (int t = 0; t < 40; ++t) {
    const auto in = random_instance(rng, t % 3 == 0);
    const auto reps = interpretability_scores(in.space, in.cats, lambdas);
    for (std::size_t l = 1; l < reps.size(); ++l) {
      ASSERT_LE(reps[l - 1].overall, reps[l].overall);
      for (std::size_t i = 0; i < reps[l].dims.size(); ++i) {
        ASSERT_LE(reps[l - 1].dims[i].score, reps[l].dims[i].score);
        ASSERT_GE(reps[l].dims[i].score, 0.0);
        ASSERT_LE(reps[l].dims[i].score, 100.0);
      }
    }
  }
}

TEST(Interpretability, PropertyNegationAndAffineInvariance) {
  Rng rng(66);
  for (int t = 0; t < 40; ++t) {
    const auto in = random_instance(rng, false);
    const int lambda = 1 + static_cast<int>(rng.below(5));
    const RankIndex base_ranks(in.space);
    const auto base = pair_scores(base_ranks, in.cats, lambda);
    const Eigen::Index c = static_cast<Eigen::Index>(rng.below(static_cast<std::uint64_t>(in.space.cols())));
    Matrix neg = in.space, aff = in.space;
    neg.col(c) = -neg.col(c);
    // Power-of-two scale keeps the transform exact, so no ranks move.
    aff.col(c) = (aff.col(c).array() * 4.0 + 3.0).matrix();
    const auto pn = pair_scores(RankIndex(neg), in.cats, lambda);
    const auto pa = pair_scores(RankIndex(aff), in.cats, lambda);
    for (std::size_t j = 0; j < in.cats.size(); ++j) {
      ASSERT_EQ(pn[static_cast<std::size_t>(c)][j].positive, base[static_cast<std::size_t>(c)][j].negative);
      ASSERT_EQ(pn[static_cast<std::size_t>(c)][j].negative, base[static_cast<std::size_t>(c)][j].positive);
      ASSERT_EQ(pa[static_cast<std::size_t>(c)][j].positive, base[static_cast<std::size_t>(c)][j].positive);
      ASSERT_EQ(pa[static_cast<std::size_t>(c)][j].negative, base[static_cast<std::size_t>(c)][j].negative);
    }
    const int ls[] = {lambda};
    const auto a = interpretability_scores(in.space, in.cats, ls)[0];
    const auto b = interpretability_scores(neg, in.cats, ls)[0];
    ASSERT_EQ(a.dims[static_cast<std::size_t>(c)].score, b.dims[static_cast<std::size_t>(c)].score);
  }
}

TEST(Interpretability, PlantedSpaceBeatsRandom) {
  auto m = testing::planted_model(2000, 30, 10, 20, 4.0, 3);
  const int lambdas[] = {5};
  const double planted = interpretability_scores(interpretable_space(m.embedding, m.categories), m.categories, lambdas)[0].overall;
  const double random = interpretability_scores(random_normal_matrix(2000, 30, 4), m.categories, lambdas)[0].overall;
  EXPECT_GT(planted, 90.0);
  EXPECT_LT(random, 30.0);
}

TEST(Interpretability, ThreadCountDoesNotChangeResults) {
  const Matrix m = random_normal_matrix(3000, 40, 10);
  const auto cats = testing::surrogate_dataset(placeholder_vocabulary(3000), 2, 30, 40, 20, 1000);
  const int lambdas[] = {1, 5, 10};
  set_thread_count(1);
  const auto a = interpretability_scores(m, cats, lambdas);
  set_thread_count(3);
  const auto b = interpretability_scores(m, cats, lambdas);
  set_thread_count(1);
  for (std::size_t l = 0; l < 3; ++l) EXPECT_EQ(a[l].overall, b[l].overall);
}

}  // namespace
}  // namespace semdecomp
