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

#include <array>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "semdecomp/error.hpp"
#include "semdecomp/vocabulary.hpp"

namespace semdecomp {

struct PreprocessStats {
  std::size_t lines = 0;   // non-empty output lines
  std::size_t tokens = 0;  // tokens written
  friend bool operator==(const PreprocessStats&, const PreprocessStats&) = default;
};

// Streaming corpus normalizer. ASCII letters are lowercased; every other
// character (digits, punctuation, apostrophes, non-ASCII code points) acts as
// a separator, so "she'll" becomes "she ll". Each input line yields at most
// one output line of single-space separated tokens; lines with no tokens are
// dropped. Input must be valid UTF-8.
class CorpusNormalizer {
 public:
  explicit CorpusNormalizer(std::ostream& out) : out_(out) {}

  void feed(std::string_view chunk) {
    for (char ch : chunk) step(static_cast<unsigned char>(ch));
  }

  // Flushes the final line; throws if input ended inside a UTF-8 sequence.
  PreprocessStats finish() {
    if (pending_ > 0)
      throw DataError("invalid UTF-8: truncated sequence at byte offset " +
                      std::to_string(lead_offset_));
    end_line();
    return stats_;
  }

 private:
  void step(unsigned char b) {
    const std::uint64_t offset = offset_++;
    if (pending_ > 0) {
      if (b < lo_ || b > hi_) fail(lead_offset_);
      lo_ = 0x80;
      hi_ = 0xBF;
      if (--pending_ == 0) separator();
      return;
    }
    if (b < 0x80) {
      const char c = static_cast<char>(b);
      if (c == '\n') {
        end_line();
      } else if (is_ascii_alpha(c)) {
        if (gap_ && !line_.empty()) line_ += ' ';
        if (gap_ || line_.empty()) ++line_tokens_;
        gap_ = false;
        line_ += ascii_lower(c);
      } else {
        separator();
      }
      return;
    }
    lead_offset_ = offset;
    lo_ = 0x80;
    hi_ = 0xBF;
    if (b >= 0xC2 && b <= 0xDF) {
      pending_ = 1;
    } else if (b >= 0xE0 && b <= 0xEF) {
      pending_ = 2;
      if (b == 0xE0) lo_ = 0xA0;
      if (b == 0xED) hi_ = 0x9F;
    } else if (b >= 0xF0 && b <= 0xF4) {
      pending_ = 3;
      if (b == 0xF0) lo_ = 0x90;
      if (b == 0xF4) hi_ = 0x8F;
    } else {
      fail(offset);
    }
  }

  void separator() { gap_ = true; }

  void end_line() {
    if (!line_.empty()) {
      line_ += '\n';
      out_ << line_;
      ++stats_.lines;
      stats_.tokens += line_tokens_;
    }
    line_.clear();
    line_tokens_ = 0;
    gap_ = false;
  }

  [[noreturn]] static void fail(std::uint64_t offset) {
    throw DataError("invalid UTF-8 at byte offset " + std::to_string(offset));
  }

  std::ostream& out_;
  std::string line_;
  std::size_t line_tokens_ = 0;
  bool gap_ = false;
  int pending_ = 0;
  unsigned char lo_ = 0x80, hi_ = 0xBF;
  std::uint64_t offset_ = 0;
  std::uint64_t lead_offset_ = 0;
  PreprocessStats stats_;
};

inline PreprocessStats preprocess_corpus(std::istream& in, std::ostream& out) {
  CorpusNormalizer normalizer(out);
  std::array<char, 1 << 16> buf{};
  while (in) {
    in.read(buf.data(), buf.size());
    const auto got = in.gcount();
    if (got <= 0) break;
    normalizer.feed(std::string_view(buf.data(), static_cast<std::size_t>(got)));
  }
  if (in.bad()) throw DataError("read error while preprocessing corpus");
  return normalizer.finish();
}

// Single-line convenience form; the result has no trailing newline.
inline std::string normalize_text(std::string_view text) {
  std::ostringstream os;
  CorpusNormalizer normalizer(os);
  normalizer.feed(text);
  normalizer.finish();
  std::string out = os.str();
  while (!out.empty() && out.back() == '\n') out.pop_back();
  return out;
}

}  // namespace semdecomp
