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
#include <filesystem>
#include <fstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "semdecomp/error.hpp"
#include "semdecomp/log.hpp"
#include "semdecomp/vocabulary.hpp"

namespace semdecomp {

struct Category {
  std::string name;
  std::vector<std::size_t> words;  // vocabulary positions, ascending, unique

  std::size_t size() const noexcept { return words.size(); }
};

// K named word categories bound to one vocabulary.
class CategoryDataset {
 public:
  CategoryDataset() = default;

  // Word lists are sorted and deduplicated; names must be unique, every
  // category non-empty and every position inside the vocabulary.
  CategoryDataset(VocabularyPtr vocab, std::vector<Category> categories)
      : vocab_(std::move(vocab)), categories_(std::move(categories)) {
    if (!vocab_) throw InvalidArgument("category dataset requires a vocabulary");
    std::unordered_set<std::string> names;
    for (auto& c : categories_) {
      if (!names.insert(c.name).second) throw DataError("duplicate category name '" + c.name + "'");
      std::sort(c.words.begin(), c.words.end());
      c.words.erase(std::unique(c.words.begin(), c.words.end()), c.words.end());
      if (c.words.empty()) throw DataError("category '" + c.name + "' is empty");
      if (c.words.back() >= vocab_->size())
        throw DataError("category '" + c.name + "' references a word outside the vocabulary");
    }
  }

  std::size_t size() const noexcept { return categories_.size(); }
  bool empty() const noexcept { return categories_.empty(); }
  const Category& operator[](std::size_t j) const { return categories_[j]; }
  const std::vector<Category>& categories() const noexcept { return categories_; }
  auto begin() const noexcept { return categories_.begin(); }
  auto end() const noexcept { return categories_.end(); }

  const Vocabulary& vocab() const noexcept { return *vocab_; }
  const VocabularyPtr& vocab_ptr() const noexcept { return vocab_; }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    out.reserve(categories_.size());
    for (const auto& c : categories_) out.push_back(c.name);
    return out;
  }

  std::size_t unique_word_count() const {
    std::unordered_set<std::size_t> all;
    for (const auto& c : categories_) all.insert(c.words.begin(), c.words.end());
    return all.size();
  }

  double mean_size() const {
    double total = 0;
    for (const auto& c : categories_) total += static_cast<double>(c.size());
    return categories_.empty() ? 0.0 : total / static_cast<double>(categories_.size());
  }

 private:
  VocabularyPtr vocab_;
  std::vector<Category> categories_;
};

// Reads one `<name>.txt` file per category (one word per line) from `dir`,
// in lexicographic filename order. Words are lowercased. Out-of-vocabulary
// words are dropped and categories left empty are excluded, each with a
// warning; an empty result is a DataError.
inline CategoryDataset load_categories(const std::filesystem::path& dir, VocabularyPtr vocab) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw DataError("category directory not found: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<Category> categories;
  for (const auto& file : files) {
    std::ifstream in(file);
    if (!in) throw DataError("cannot open category file " + file.string());
    Category cat{file.stem().string(), {}};
    std::vector<std::string> missing;
    std::string line;
    while (std::getline(in, line)) {
      auto b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos) continue;
      auto e = line.find_last_not_of(" \t\r");
      const std::string word = to_lower(std::string_view(line).substr(b, e - b + 1));
      if (auto pos = vocab->find(word)) {
        cat.words.push_back(*pos);
      } else {
        missing.push_back(word);
      }
    }
    if (!missing.empty()) {
      std::string list;
      for (std::size_t i = 0; i < missing.size() && i < 5; ++i) list += (i ? ", " : "") + missing[i];
      if (missing.size() > 5) list += ", ...";
      warn("category '" + cat.name + "': dropped " + std::to_string(missing.size()) +
           " out-of-vocabulary word(s): " + list);
    }
    if (cat.words.empty()) {
      warn("category '" + cat.name + "' is empty after filtering; excluded");
      continue;
    }
    categories.push_back(std::move(cat));
  }
  if (categories.empty()) throw DataError("no non-empty categories in " + dir.string());
  return CategoryDataset(std::move(vocab), std::move(categories));
}

inline void write_categories(const std::filesystem::path& dir, const CategoryDataset& cats) {
  std::filesystem::create_directories(dir);
  for (const auto& c : cats) {
    std::ofstream out(dir / (c.name + ".txt"));
    for (auto w : c.words) out << cats.vocab()[w] << '\n';
    if (!out) throw DataError("cannot write category file for '" + c.name + "'");
  }
}

}  // namespace semdecomp
