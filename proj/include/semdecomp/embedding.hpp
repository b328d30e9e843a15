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

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "semdecomp/error.hpp"
#include "semdecomp/io/format.hpp"
#include "semdecomp/log.hpp"
#include "semdecomp/vocabulary.hpp"

namespace semdecomp {

// Column-major, so each embedding dimension is a contiguous column.
using Matrix = Eigen::MatrixXd;

// V x D real matrix bound to an ordered vocabulary.
class EmbeddingMatrix {
 public:
  EmbeddingMatrix() = default;

  EmbeddingMatrix(VocabularyPtr vocab, Matrix values)
      : vocab_(std::move(vocab)), values_(std::move(values)) {
    if (!vocab_) throw InvalidArgument("embedding requires a vocabulary");
    if (static_cast<std::size_t>(values_.rows()) != vocab_->size())
      throw InvalidArgument("embedding has " + std::to_string(values_.rows()) +
                            " rows but vocabulary has " + std::to_string(vocab_->size()));
    if (values_.cols() < 1) throw InvalidArgument("embedding dimension must be positive");
    if (!values_.allFinite()) throw DataError("embedding contains non-finite values");
  }

  const Vocabulary& vocab() const noexcept { return *vocab_; }
  const VocabularyPtr& vocab_ptr() const noexcept { return vocab_; }
  const Matrix& values() const noexcept { return values_; }
  std::size_t rows() const noexcept { return static_cast<std::size_t>(values_.rows()); }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(values_.cols()); }

 private:
  VocabularyPtr vocab_;
  Matrix values_;
};

// (token, count) pairs sorted by descending count, ties lexicographic.
class FrequencyList {
 public:
  FrequencyList() = default;

  explicit FrequencyList(std::vector<std::pair<std::string, std::uint64_t>> entries)
      : entries_(std::move(entries)) {
    std::unordered_map<std::string, std::size_t> seen;
    for (const auto& [token, count] : entries_) {
      if (count == 0) throw DataError("frequency for '" + token + "' must be positive");
      if (!seen.emplace(token, 0).second)
        throw DataError("duplicate token '" + token + "' in frequency list");
    }
    std::stable_sort(entries_.begin(), entries_.end(), [](const auto& a, const auto& b) {
      return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
  }

  const std::vector<std::pair<std::string, std::uint64_t>>& entries() const noexcept {
    return entries_;
  }
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::vector<std::pair<std::string, std::uint64_t>> entries_;
};

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace detail

inline FrequencyList read_frequency_list(std::istream& in, const std::string& source = "<stream>") {
  std::vector<std::pair<std::string, std::uint64_t>> entries;
  std::unordered_map<std::string, std::size_t> first_line;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto fields = detail::split_fields(detail::strip_cr(raw));
    if (fields.empty()) continue;
    if (fields.size() != 2) throw DataError(source, line_no, "expected 'token count'");
    auto count = io::parse_int<std::uint64_t>(fields[1]);
    if (!count || *count == 0) throw DataError(source, line_no, "count must be a positive integer");
    std::string token = to_lower(fields[0]);
    if (auto [it, fresh] = first_line.emplace(token, line_no); !fresh)
      throw DataError(source, line_no,
                      "duplicate token '" + token + "' (first on line " +
                          std::to_string(it->second) + ")");
    entries.emplace_back(std::move(token), *count);
  }
  return FrequencyList(std::move(entries));
}

inline FrequencyList load_frequency_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open frequency list " + path.string());
  return read_frequency_list(in, path.string());
}

struct EmbeddingLoadOptions {
  std::optional<std::size_t> vocab_limit;
  const FrequencyList* frequencies = nullptr;
};

// Parses `token v1 ... vD` lines. Tokens are lowercased; tokens that are not
// purely alphabetic are skipped with a warning. With a limit and a frequency
// list the most frequent tokens are retained (unlisted tokens rank last, ties
// lexicographic); with a limit alone the first lines of the file win. Retained
// rows keep file order.
inline EmbeddingMatrix read_embedding(std::istream& in, const std::string& source = "<stream>",
                                      const EmbeddingLoadOptions& options = {}) {
  std::vector<std::string> tokens;
  std::vector<double> data;
  std::unordered_map<std::string, std::size_t> first_line;
  std::size_t dim = 0;
  std::size_t skipped = 0;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto fields = detail::split_fields(detail::strip_cr(raw));
    if (fields.empty()) continue;
    if (fields.size() < 2) throw DataError(source, line_no, "expected a token followed by values");
    const std::size_t d = fields.size() - 1;
    if (dim == 0) {
      dim = d;
    } else if (d != dim) {
      throw DataError(source, line_no,
                      "inconsistent dimension: " + std::to_string(d) + " values, expected " +
                          std::to_string(dim));
    }
    std::string token = to_lower(fields[0]);
    if (!is_alphabetic_token(token)) {
      ++skipped;
      continue;
    }
    if (auto [it, fresh] = first_line.emplace(token, line_no); !fresh)
      throw DataError(source, line_no,
                      "duplicate token '" + token + "' (first on line " +
                          std::to_string(it->second) + ")");
    for (std::size_t k = 1; k < fields.size(); ++k) {
      auto v = io::parse_double(fields[k]);
      if (!v) throw DataError(source, line_no, "cannot parse value '" + std::string(fields[k]) + "'");
      if (!std::isfinite(*v)) throw DataError(source, line_no, "non-finite value");
      data.push_back(*v);
    }
    tokens.push_back(std::move(token));
  }
  if (skipped > 0)
    warn(source + ": skipped " + std::to_string(skipped) + " non-alphabetic token(s)");
  if (tokens.empty()) throw DataError(source + ": no embedding rows");

  std::vector<std::size_t> keep(tokens.size());
  std::iota(keep.begin(), keep.end(), std::size_t{0});
  if (options.vocab_limit && *options.vocab_limit < tokens.size()) {
    const std::size_t limit = *options.vocab_limit;
    if (options.frequencies) {
      std::unordered_map<std::string_view, std::size_t> rank;
      const auto& entries = options.frequencies->entries();
      for (std::size_t r = 0; r < entries.size(); ++r) rank.emplace(entries[r].first, r);
      std::vector<std::size_t> order = keep;
      auto rank_of = [&](std::size_t row) {
        auto it = rank.find(tokens[row]);
        return it == rank.end() ? entries.size() + row : it->second;
      };
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return rank_of(a) < rank_of(b); });
      order.resize(limit);
      std::sort(order.begin(), order.end());
      keep = std::move(order);
    } else {
      keep.resize(limit);
    }
  }

  Matrix values(static_cast<Eigen::Index>(keep.size()), static_cast<Eigen::Index>(dim));
  std::vector<std::string> kept_tokens;
  kept_tokens.reserve(keep.size());
  for (std::size_t r = 0; r < keep.size(); ++r) {
    const double* row = data.data() + keep[r] * dim;
    for (std::size_t c = 0; c < dim; ++c)
      values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = row[c];
    kept_tokens.push_back(std::move(tokens[keep[r]]));
  }
  return EmbeddingMatrix(make_vocabulary(std::move(kept_tokens)), std::move(values));
}

inline EmbeddingMatrix load_embedding(const std::filesystem::path& path,
                                      const EmbeddingLoadOptions& options = {}) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open embedding file " + path.string());
  return read_embedding(in, path.string(), options);
}

// Writes the text format with shortest round-trip decimal values.
inline void write_embedding(std::ostream& out, const EmbeddingMatrix& e) {
  std::string line;
  for (std::size_t r = 0; r < e.rows(); ++r) {
    line = e.vocab()[r];
    for (std::size_t c = 0; c < e.dim(); ++c) {
      line += ' ';
      io::append_double(line, e.values()(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)));
    }
    line += '\n';
    out << line;
  }
}

}  // namespace semdecomp
