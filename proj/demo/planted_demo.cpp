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


// Builds a small embedding with known category structure, then runs the
// decomposition, interpretability and retrieval pipelines on it.
//
//   planted_demo [seed]

#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "semdecomp/semdecomp.hpp"

using namespace semdecomp;

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;
  const std::size_t v = 3000, d = 40, k = 8, n = 25;

  // Standard-normal noise; category j is shifted by +3 on dimension planted[j].
  Matrix m = random_normal_matrix(v, d, seed);
  Rng rng(derive_seed(seed, 1));
  const auto dims = rng.subset(d, k);
  std::vector<std::size_t> words(v);
  for (std::size_t i = 0; i < v; ++i) words[i] = i;
  rng.shuffle(words);
  auto vocab = placeholder_vocabulary(v);
  std::vector<Category> cats;
  for (std::size_t j = 0; j < k; ++j) {
    Category c{"topic_" + std::to_string(j), {words.begin() + j * n, words.begin() + (j + 1) * n}};
    for (auto w : c.words) m(w, dims[j]) += 3.0;
    cats.push_back(std::move(c));
  }
  const EmbeddingMatrix e(vocab, std::move(m));
  const CategoryDataset ds(vocab, std::move(cats));

  const auto raw = compute_weights(e, ds, WeightMetric::bhattacharyya);
  const auto w = finalize_weights(raw);
  std::cout << std::left << std::setw(10) << "category" << std::right << std::setw(9) << "planted"
            << std::setw(11) << "strongest" << std::setw(9) << "weight" << '\n';
  for (std::size_t j = 0; j < k; ++j) {
    const auto top = decomposition_report(w, ReportAxis::category, j, 1).front();
    std::cout << std::left << std::setw(10) << ds[j].name << std::right << std::setw(9) << dims[j]
              << std::setw(11) << top.index << std::setw(9) << io::format_fixed(top.weight, 3) << '\n';
  }

  const int lambdas[] = {1, 5};
  const auto scored = [&](const Matrix& s) { return interpretability_scores(s, ds, lambdas); };
  const auto is_b = scored(interpretable_space(e, ds).values());
  const auto is_c = scored(centers_space(e, ds).values());
  const auto is_e = scored(e.values());
  std::cout << "\ninterpretability (lambda=1, lambda=5)\n"
            << "  bhattacharyya space  " << io::format_fixed(is_b[0].overall, 1) << "  "
            << io::format_fixed(is_b[1].overall, 1) << '\n'
            << "  centers space        " << io::format_fixed(is_c[0].overall, 1) << "  "
            << io::format_fixed(is_c[1].overall, 1) << '\n'
            << "  raw embedding        " << io::format_fixed(is_e[0].overall, 1) << "  "
            << io::format_fixed(is_e[1].overall, 1) << '\n';

  RetrievalOptions ro;
  ro.ks = {1, 5, 40};
  ro.repeats = 5;
  ro.seed = seed;
  const auto rb = retrieval_test(e, ds, ro);
  ro.metric = WeightMetric::centers;
  const auto rc = retrieval_test(e, ds, ro);
  std::cout << "\nretrieval accuracy, top n (bhattacharyya / centers)\n";
  for (auto kk : ro.ks)
    std::cout << "  k=" << std::left << std::setw(4) << kk << std::right << io::format_fixed(rb.at(kk, 1).mean_accuracy, 1) << " / "
              << io::format_fixed(rc.at(kk, 1).mean_accuracy, 1) << '\n';

  const auto strengths = category_strengths(raw, e, {n, 20, seed});
  std::cout << "\nstrongest category " << strengths.ranked.front().name << " ("
            << io::format_fixed(strengths.ranked.front().total, 3) << "), random baseline "
            << io::format_fixed(strengths.baseline, 3) << '\n';
  return 0;
}
