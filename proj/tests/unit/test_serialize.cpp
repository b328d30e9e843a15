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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "semdecomp/io/csv.hpp"
#include "semdecomp/io/files.hpp"
#include "semdecomp/io/format.hpp"
#include "semdecomp/io/serialize.hpp"
#include "semdecomp/random_embedding.hpp"
#include "support/fixtures.hpp"

namespace semdecomp {
namespace {

namespace fs = std::filesystem;

TEST(Format, ShortestRoundTrip) {
  EXPECT_EQ(io::format_double(0.1), "0.1");
  EXPECT_EQ(io::format_double(-2.5), "-2.5");
  EXPECT_EQ(io::format_double(1e-300), "1e-300");
  Rng rng(4);
  for (int i = 0; i < 10000; ++i) {
    const double v = (rng.uniform() - 0.5) * std::pow(10.0, static_cast<double>(rng.below(40)) - 20);
    ASSERT_EQ(*io::parse_double(io::format_double(v)), v);
  }
  EXPECT_FALSE(io::parse_double("1.5x"));
  EXPECT_FALSE(io::parse_double(""));
  EXPECT_EQ(*io::parse_double("+3"), 3.0);
  EXPECT_EQ(io::format_fixed(3.14159, 2), "3.14");
  EXPECT_FALSE(io::parse_int<int>("12a"));
}

TEST(Csv, QuotingAndParsing) {
  EXPECT_EQ(io::csv_field("plain"), "plain");
  EXPECT_EQ(io::csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(io::csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  const std::string row = io::csv_row({"x", "a,b", "q\"q", "multi\nline", ""});
  std::istringstream in(row + "next,1\r\n");
  std::vector<std::string> f;
  ASSERT_TRUE(io::read_csv_record(in, f));
  EXPECT_EQ(f, (std::vector<std::string>{"x", "a,b", "q\"q", "multi\nline", ""}));
  ASSERT_TRUE(io::read_csv_record(in, f));
  EXPECT_EQ(f, (std::vector<std::string>{"next", "1"}));
  EXPECT_FALSE(io::read_csv_record(in, f));
  std::istringstream bad("\"open");
  EXPECT_THROW(io::read_csv_record(bad, f), DataError);
}

TEST(Serialize, WeightsRoundTripWithSidecar) {
  auto m = testing::planted_model(200, 7, 3, 10, 2.0, 1);
  const auto w = finalize_weights(compute_weights(m.embedding, m.categories, WeightMetric::bhattacharyya));
  const std::string csv = io::weights_csv(w);
  std::istringstream first(csv);
  std::string header;
  std::getline(first, header);
  EXPECT_EQ(header, "dim,planted_0,planted_1,planted_2");
  std::istringstream in(csv);
  const auto back = io::read_weights_csv(in, io::weights_sidecar(w));
  EXPECT_EQ(back.names, w.names);
  EXPECT_EQ(back.state, WeightState::sign_corrected);
  EXPECT_EQ(back.metric, WeightMetric::bhattacharyya);
  EXPECT_TRUE((back.values.array() == w.values.array()).all());
  const auto side = io::weights_sidecar(w);
  EXPECT_EQ(side["state"], "signed");
  EXPECT_EQ(side["dims"], 7);
}

TEST(Serialize, ReadWeightsRejectsMalformedInput) {
  std::istringstream a("x,a\n0,1\n");
  EXPECT_THROW(io::read_weights_csv(a, {}), DataError);
  std::istringstream b("dim,a\n0,1,2\n");
  EXPECT_THROW(io::read_weights_csv(b, {}), DataError);
  std::istringstream c("dim,a\n1,1\n");
  EXPECT_THROW(io::read_weights_csv(c, {}), DataError);
  std::istringstream d("dim,a\n0,abc\n");
  EXPECT_THROW(io::read_weights_csv(d, {}), DataError);
  std::istringstream e("dim,a\n0,1\n");
  EXPECT_THROW(io::read_weights_csv(e, {{"state", "weird"}}), DataError);
}

TEST(Serialize, SpaceAndReportHeaders) {
  auto m = testing::planted_model(50, 4, 2, 5, 2.0, 2);
  const auto s = centers_space(m.embedding, m.categories);
  const std::string csv = io::space_csv(s);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "word,planted_0,planted_1");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 51);
  const auto nrep = ks_normality(generate_random_embedding(60, 2, 1));
  EXPECT_EQ(io::normality_csv(nrep).substr(0, 28), "dim,statistic,p_value,normal");
}

TEST(Files, Sha256KnownVectors) {
  io::Sha256 h;
  h.update("abc");
  EXPECT_EQ(h.hex(), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  io::Sha256 empty;
  EXPECT_EQ(empty.hex(), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(Files, AtomicWriteAndDirectoryDigest) {
  const fs::path dir = fs::temp_directory_path() / ("semdecomp_files_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  io::write_file_atomic(dir / "sub" / "a.txt", "hello\n");
  EXPECT_FALSE(fs::exists(dir / "sub" / "a.txt.tmp"));
  std::ifstream in(dir / "sub" / "a.txt");
  std::string s;
  std::getline(in, s);
  EXPECT_EQ(s, "hello");
  const std::string d1 = io::content_digest(dir);
  io::write_file_atomic(dir / "sub" / "a.txt", "hellp\n");
  const std::string d2 = io::content_digest(dir);
  EXPECT_NE(d1, d2);
  io::write_file_atomic(dir / "sub" / "a.txt", "hello\n");
  EXPECT_EQ(io::content_digest(dir), d1);
  fs::rename(dir / "sub" / "a.txt", dir / "sub" / "b.txt");
  EXPECT_NE(io::content_digest(dir), d1);
  EXPECT_THROW(io::content_digest(dir / "missing"), DataError);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace semdecomp
