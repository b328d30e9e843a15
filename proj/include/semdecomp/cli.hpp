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

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "semdecomp/io/csv.hpp"
#include "semdecomp/io/files.hpp"
#include "semdecomp/io/format.hpp"
#include "semdecomp/io/serialize.hpp"
#include "semdecomp/semdecomp.hpp"

#ifndef SEMDECOMP_VERSION
#define SEMDECOMP_VERSION "dev"
#endif

namespace semdecomp::cli {

namespace fs = std::filesystem;
using nlohmann::json;

// Bad flag value or missing required flag; exits with status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "1-10", "5,7,10", "3" and mixtures such as "1-3,7".
template <typename Int>
std::vector<Int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    const auto dash = part.find('-', 1);
    if (dash != std::string::npos) {
      auto lo = io::parse_int<Int>(part.substr(0, dash));
      auto hi = io::parse_int<Int>(part.substr(dash + 1));
      if (!lo || !hi || *lo > *hi) throw UsageError(flag + ": bad range '" + part + "'");
      for (Int v = *lo; v <= *hi; ++v) out.push_back(v);
    } else {
      auto v = io::parse_int<Int>(part);
      if (!v) throw UsageError(flag + ": bad integer '" + part + "'");
      out.push_back(*v);
    }
  }
  if (out.empty()) throw UsageError(flag + ": empty list");
  return out;
}

inline std::vector<double> parse_double_list(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    auto v = io::parse_double(part);
    if (!v) throw UsageError(flag + ": bad number '" + part + "'");
    out.push_back(*v);
  }
  if (out.empty()) throw UsageError(flag + ": empty list");
  return out;
}

struct Options {
  std::string input = "-", output = "-";
  std::string embedding, freq, categories, vocab_from, out_dir = ".";
  std::size_t vocab_limit = 0;
  std::optional<std::uint64_t> seed;
  std::size_t threads = 1;
  std::string metric = "bhattacharyya";
  std::string state = "raw";
  std::string variant = "finalized";
  std::string reference = "fitted";
  double alpha = 0.05;
  bool no_bonferroni = false;
  std::size_t k = 0;
  std::string ks = "5,7,10,15,25,50,100,200,300";
  std::size_t repeats = 10;
  double split = 0.6;
  std::string lambdas = "1-10";
  int lambda = 5;
  std::string space = "embedding";
  std::string spaces = "embedding,random,centers,bhattacharyya";
  std::string coverage = "40,60,80,100";
  std::string counts = "30,50,70,90,110";
  std::size_t baseline_words = 91, resamples = 20;
  std::string axis = "dimension";
  std::size_t index = 0;
  std::string word, category;
  std::size_t top = 20;
  std::size_t rows = 0, dim = 0;
  std::string distance = "euclidean";
};

class Run {
 public:
  Run(std::string command, const Options& o) : command_(std::move(command)), o_(o) {}

  EmbeddingMatrix embedding() {
    require(o_.embedding, "--embedding");
    record_input(o_.embedding);
    EmbeddingLoadOptions lo;
    if (o_.vocab_limit > 0) lo.vocab_limit = o_.vocab_limit;
    FrequencyList freq;
    if (!o_.freq.empty()) {
      record_input(o_.freq);
      freq = load_frequency_list(o_.freq);
      lo.frequencies = &freq;
    }
    return load_embedding(o_.embedding, lo);
  }

  CategoryDataset categories(const EmbeddingMatrix& e) {
    require(o_.categories, "--categories");
    record_input(o_.categories);
    return load_categories(o_.categories, e.vocab_ptr());
  }

  std::uint64_t seed() {
    if (!o_.seed) throw UsageError(command_ + " requires --seed");
    return *o_.seed;
  }

  WeightMetric metric() const {
    auto m = parse_metric(o_.metric);
    if (!m) throw UsageError("--metric must be bhattacharyya or centers");
    return *m;
  }

  void record_input(const std::string& path) {
    if (fs::exists(path)) inputs_[fs::absolute(path).lexically_normal().string()] = io::content_digest(path);
  }

  void add_output(const std::string& name, std::string contents) { outputs_.emplace_back(name, std::move(contents)); }

  json& parameters() { return params_; }

  // Everything is computed before the first byte hits the disk.
  void commit() {
    const fs::path dir(o_.out_dir);
    json manifest = {{"tool", "semdecomp"},
                     {"version", SEMDECOMP_VERSION},
                     {"command", command_},
                     {"seed", o_.seed ? json(*o_.seed) : json(nullptr)},
                     {"threads", o_.threads},
                     {"parameters", params_},
                     {"inputs", inputs_}};
    json files = json::array();
    for (const auto& [name, contents] : outputs_) {
      io::write_file_atomic(dir / name, contents);
      files.push_back(name);
    }
    manifest["outputs"] = files;
    io::write_file_atomic(dir / "manifest.json", manifest.dump(2) + "\n");
  }

  static void require(const std::string& value, const std::string& flag) {
    if (value.empty()) throw UsageError("missing required flag " + flag);
  }

 private:
  std::string command_;
  const Options& o_;
  std::map<std::string, std::string> inputs_;
  json params_ = json::object();
  std::vector<std::pair<std::string, std::string>> outputs_;
};

inline int cmd_preprocess(const Options& o) {
  std::ifstream fin;
  std::istream* in = &std::cin;
  if (o.input != "-") {
    fin.open(o.input, std::ios::binary);
    if (!fin) throw DataError("cannot open " + o.input);
    in = &fin;
  }
  PreprocessStats stats;
  if (o.output == "-") {
    stats = preprocess_corpus(*in, std::cout);
  } else {
    const fs::path target(o.output);
    fs::path tmp = target;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw DataError("cannot write " + tmp.string());
      try {
        stats = preprocess_corpus(*in, out);
      } catch (...) {
        out.close();
        fs::remove(tmp);
        throw;
      }
    }
    fs::rename(tmp, target);
    json manifest = {{"tool", "semdecomp"},
                     {"version", SEMDECOMP_VERSION},
                     {"command", "preprocess"},
                     {"inputs", o.input == "-" ? json::object()
                                               : json{{o.input, io::content_digest(o.input)}}},
                     {"lines", stats.lines},
                     {"tokens", stats.tokens}};
    fs::path mpath = target;
    mpath += ".manifest.json";
    io::write_file_atomic(mpath, manifest.dump(2) + "\n");
  }
  std::cerr << "lines=" << stats.lines << " tokens=" << stats.tokens << '\n';
  return 0;
}

inline int cmd_normality(const Options& o) {
  Run run("normality", o);
  const auto e = run.embedding();
  NormalityOptions no;
  no.alpha = o.alpha;
  no.bonferroni = !o.no_bonferroni;
  if (o.reference == "fitted") {
    no.reference = KsReference::fitted;
  } else if (o.reference == "standard") {
    no.reference = KsReference::standard;
  } else {
    throw UsageError("--reference must be fitted or standard");
  }
  const auto rep = ks_normality(e, no);
  run.parameters() = {{"alpha", o.alpha}, {"bonferroni", no.bonferroni}, {"reference", o.reference},
                      {"normal_dimensions", rep.normal_count()}, {"dims", rep.dims()}};
  run.add_output("normality.csv", io::normality_csv(rep));
  run.commit();
  std::cerr << rep.normal_count() << "/" << rep.dims() << " dimensions normal\n";
  return 0;
}

inline CategoryWeightMatrix weights_in_state(CategoryWeightMatrix w, const std::string& state) {
  if (w.metric == WeightMetric::centers || state == "raw") return w;
  if (state == "normalized") return normalize_weights(std::move(w));
  if (state == "signed") return finalize_weights(std::move(w));
  throw UsageError("--state must be raw, normalized or signed");
}

inline int cmd_decompose(const Options& o) {
  Run run("decompose", o);
  const auto e = run.embedding();
  const auto cats = run.categories(e);
  auto w = compute_weights(e, cats, run.metric());
  w = weights_in_state(std::move(w), o.state);
  json sidecar = io::weights_sidecar(w);
  sidecar["seed"] = o.seed ? json(*o.seed) : json(nullptr);
  sidecar["sources"] = {{"embedding", io::content_digest(o.embedding)},
                        {"categories", io::content_digest(o.categories)}};
  run.parameters() = {{"metric", o.metric}, {"state", std::string(to_string(w.state))}};
  run.add_output("weights.csv", io::weights_csv(w));
  run.add_output("weights.json", sidecar.dump(2) + "\n");
  if (w.metric == WeightMetric::bhattacharyya) run.add_output("signs.csv", io::signs_csv(w));
  run.commit();
  return 0;
}

inline int cmd_project(const Options& o) {
  Run run("project", o);
  const auto e = run.embedding();
  const auto cats = run.categories(e);
  const WeightMetric metric = run.metric();
  CategoryWeightMatrix w = compute_weights(e, cats, metric);
  const EmbeddingMatrix base = metric == WeightMetric::bhattacharyya ? standardize(e).embedding : e;
  if (metric == WeightMetric::bhattacharyya) w = finalize_weights(std::move(w));
  const SemanticSpace space = o.k > 0 ? project(base, sparsify(w, o.k)) : project(base, w);
  run.parameters() = {{"metric", o.metric}, {"k", o.k > 0 ? json(o.k) : json("all")}};
  run.add_output("space.csv", io::space_csv(space));
  run.commit();
  return 0;
}

inline int cmd_strengths(const Options& o) {
  Run run("strengths", o);
  const auto e = run.embedding();
  const auto cats = run.categories(e);
  StrengthOptions so{o.baseline_words, o.resamples, run.seed()};
  const auto rep = category_strengths(compute_weights(e, cats, WeightMetric::bhattacharyya), e, so);
  run.parameters() = {{"baseline_words", o.baseline_words}, {"resamples", o.resamples},
                      {"baseline", rep.baseline}, {"baseline_std", rep.baseline_std}};
  run.add_output("strengths.csv", io::strengths_csv(rep));
  run.commit();
  return 0;
}

inline int cmd_report(const Options& o) {
  Run run("report", o);
  const auto e = run.embedding();
  const auto cats = run.categories(e);
  run.parameters() = {{"axis", o.axis}, {"top", o.top}, {"metric", o.metric}};
  if (o.axis == "word") {
    Run::require(o.word, "--word");
    const WeightMetric metric = run.metric();
    const SemanticSpace space =
        metric == WeightMetric::bhattacharyya ? interpretable_space(e, cats) : centers_space(e, cats);
    run.parameters()["word"] = o.word;
    run.add_output("report.csv", io::word_report_csv(word_report(space, cats, o.word, o.top)));
  } else {
    ReportAxis axis;
    if (o.axis == "dimension") {
      axis = ReportAxis::dimension;
    } else if (o.axis == "category") {
      axis = ReportAxis::category;
    } else {
      throw UsageError("--axis must be dimension, category or word");
    }
    std::size_t index = o.index;
    if (axis == ReportAxis::category && !o.category.empty()) {
      const auto names = cats.names();
      auto it = std::find(names.begin(), names.end(), o.category);
      if (it == names.end()) throw InvalidArgument("unknown category '" + o.category + "'");
      index = static_cast<std::size_t>(it - names.begin());
    }
    const auto w = weights_in_state(compute_weights(e, cats, run.metric()), o.state);
    run.parameters()["index"] = index;
    run.parameters()["state"] = std::string(to_string(w.state));
    run.add_output("report.csv", io::report_csv(decomposition_report(w, axis, index, o.top)));
  }
  run.commit();
  return 0;
}

inline int cmd_retrieval(const Options& o) {
  Run run("retrieval", o);
  const auto e = run.embedding();
  const auto cats = run.categories(e);
  RetrievalOptions ro;
  ro.ks = parse_int_list<std::size_t>(o.ks, "--ks");
  ro.repeats = o.repeats;
  ro.split = o.split;
  ro.seed = run.seed();
  ro.metric = run.metric();
  if (o.variant == "finalized") {
    ro.variant = BhattacharyyaVariant::finalized;
  } else if (o.variant == "raw") {
    ro.variant = BhattacharyyaVariant::raw;
  } else {
    throw UsageError("--variant must be finalized or raw");
  }
  const auto rep = retrieval_test(e, cats, ro);
  run.parameters() = {{"metric", o.metric}, {"ks", ro.ks}, {"repeats", ro.repeats},
                      {"split", ro.split}, {"variant", o.variant}};
  run.add_output("retrieval.csv", io::retrieval_csv(rep));
  run.add_output("retrieval.json", io::retrieval_json(rep).dump(2) + "\n");
  run.commit();
  return 0;
}

// The scored matrix for a named space.
inline Matrix space_matrix(const std::string& kind, const EmbeddingMatrix& e, const CategoryDataset& cats,
                           Run& run, std::size_t dim_override) {
  if (kind == "embedding") return e.values();
  if (kind == "random")
    return random_normal_matrix(e.rows(), dim_override > 0 ? dim_override : e.dim(), run.seed());
  if (kind == "bhattacharyya") return interpretable_space(e, cats).values();
  if (kind == "centers") return centers_space(e, cats).values();
  throw UsageError("unknown space '" + kind + "' (embedding, random, bhattacharyya, centers)");
}

inline int cmd_interpretability(const Options& o) {
  Run run("interpretability", o);
  const auto e = run.embedding();
  const auto cats = run.categories(e);
  const auto lambdas = parse_int_list<int>(o.lambdas, "--lambda");
  const Matrix m = space_matrix(o.space, e, cats, run, o.dim);
  const auto reports = interpretability_scores(m, cats, lambdas, o.space);
  run.parameters() = {{"space", o.space}, {"lambdas", lambdas}};
  run.add_output("interpretability.csv", io::interpretability_csv(reports));
  run.add_output("interpretability.json", io::interpretability_json(reports, cats.names()).dump(2) + "\n");
  run.commit();
  return 0;
}

inline int cmd_study(const Options& o) {
  Run run("study", o);
  const auto e = run.embedding();
  const auto cats = run.categories(e);
  StudyOptions so;
  so.coverage = parse_double_list(o.coverage, "--coverage");
  so.category_counts = parse_int_list<std::size_t>(o.counts, "--counts");
  so.repeats = o.repeats;
  so.lambda = o.lambda;
  so.seed = run.seed();
  if (o.distance == "cosine") {
    so.distance = CenterDistance::cosine;
  } else if (o.distance != "euclidean") {
    throw UsageError("--distance must be euclidean or cosine");
  }
  std::vector<std::string> names;
  {
    std::stringstream ss(o.spaces);
    std::string part;
    while (std::getline(ss, part, ','))
      if (!part.empty()) names.push_back(part);
  }
  std::optional<EmbeddingMatrix> random;
  std::vector<StudySpace> spaces;
  for (const auto& n : names) {
    if (n == "embedding") {
      spaces.push_back({n, StudySpaceKind::fixed, &e});
    } else if (n == "random") {
      random.emplace(generate_random_embedding(e.rows(), e.dim(), derive_seed(so.seed, 0x52414e44), e.vocab_ptr()));
      spaces.push_back({n, StudySpaceKind::fixed, &*random});
    } else if (n == "bhattacharyya") {
      spaces.push_back({n, StudySpaceKind::bhattacharyya, &e});
    } else if (n == "centers") {
      spaces.push_back({n, StudySpaceKind::centers, &e});
    } else {
      throw UsageError("unknown study space '" + n + "'");
    }
  }
  const auto rep = subsample_study(spaces, cats, e, so);
  run.parameters() = {{"spaces", names}, {"coverage", so.coverage}, {"counts", so.category_counts},
                      {"repeats", so.repeats}, {"lambda", so.lambda}, {"distance", o.distance}};
  run.add_output("study.csv", io::study_csv(rep));
  run.commit();
  return 0;
}

inline int cmd_random_embedding(const Options& o) {
  Run run("random-embedding", o);
  VocabularyPtr vocab;
  std::size_t rows = o.rows;
  std::size_t dim = o.dim;
  if (!o.vocab_from.empty()) {
    run.record_input(o.vocab_from);
    const auto src = load_embedding(o.vocab_from);
    vocab = src.vocab_ptr();
    rows = src.rows();
    if (dim == 0) dim = src.dim();
  }
  if (rows == 0 || dim == 0) throw UsageError("random-embedding needs --rows/--dim or --vocab-from");
  const auto e = generate_random_embedding(rows, dim, run.seed(), vocab);
  std::ostringstream text;
  write_embedding(text, e);
  run.parameters() = {{"rows", rows}, {"dim", dim}};
  run.add_output(o.output == "-" ? "random_embedding.txt" : o.output, text.str());
  run.commit();
  return 0;
}

// Expands `--config file.json` into flags placed before the explicit ones,
// so explicit flags win.
inline std::vector<std::string> expand_config(std::vector<std::string> args) {
  for (std::size_t i = 1; i + 1 < args.size(); ++i) {
    if (args[i] != "--config") continue;
    std::ifstream in(args[i + 1]);
    if (!in) throw UsageError("cannot open config " + args[i + 1]);
    json cfg;
    try {
      cfg = json::parse(in);
    } catch (const json::exception& ex) {
      throw UsageError("config " + args[i + 1] + ": " + ex.what());
    }
    if (!cfg.is_object()) throw UsageError("config must be a JSON object");
    std::vector<std::string> extra;
    for (const auto& [key, value] : cfg.items()) {
      const std::string flag = "--" + key;
      if (value.is_boolean()) {
        if (value.get<bool>()) extra.push_back(flag);
      } else if (value.is_array()) {
        std::string joined;
        for (const auto& v : value) {
          if (!joined.empty()) joined += ',';
          joined += v.is_string() ? v.get<std::string>() : v.dump();
        }
        extra.push_back(flag);
        extra.push_back(joined);
      } else {
        extra.push_back(flag);
        extra.push_back(value.is_string() ? value.get<std::string>() : value.dump());
      }
    }
    args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    args.insert(args.begin() + 1, extra.begin(), extra.end());
    break;
  }
  return args;
}

// Entry point. args[0] is the subcommand. Returns 0 on success, 2 on usage
// errors, 1 on data errors.
inline int run(std::vector<std::string> args, std::ostream& err = std::cerr) {
  Options o;
  CLI::App app{"semdecomp: semantic decomposition and interpretability of word embeddings", "semdecomp"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.set_version_flag("--version", SEMDECOMP_VERSION);

  auto common = [&](CLI::App* c) {
    c->add_option("--out", o.out_dir, "Output directory");
    c->add_option("--threads", o.threads, "Parallelism hint")->check(CLI::PositiveNumber);
    c->add_option("--seed", o.seed, "Random seed");
    c->add_option("--config", "JSON file of flag overrides");
  };
  auto embedding_flags = [&](CLI::App* c) {
    c->add_option("--embedding", o.embedding, "Embedding text file");
    c->add_option("--vocab-limit", o.vocab_limit, "Keep this many most frequent words");
    c->add_option("--freq", o.freq, "Frequency list (token count per line)");
  };
  auto category_flags = [&](CLI::App* c) {
    embedding_flags(c);
    c->add_option("--categories", o.categories, "Directory of <category>.txt files");
    c->add_option("--metric", o.metric, "bhattacharyya or centers");
  };

  auto* pre = app.add_subcommand("preprocess", "Normalize a raw text corpus");
  pre->add_option("--input", o.input, "Input file or -");
  pre->add_option("--output", o.output, "Output file or -");
  pre->add_option("--config", "JSON file of flag overrides");

  auto* nor = app.add_subcommand("normality", "Per-dimension KS normality test");
  common(nor);
  embedding_flags(nor);
  nor->add_option("--alpha", o.alpha);
  nor->add_flag("--no-bonferroni", o.no_bonferroni);
  nor->add_option("--reference", o.reference, "fitted or standard");

  auto* dec = app.add_subcommand("decompose", "Compute the category weight matrix");
  common(dec);
  category_flags(dec);
  dec->add_option("--state", o.state, "raw, normalized or signed");

  auto* prj = app.add_subcommand("project", "Project the embedding onto category weights");
  common(prj);
  category_flags(prj);
  prj->add_option("--k", o.k, "Keep the k largest weights per category");

  auto* str = app.add_subcommand("strengths", "Total representation strength per category");
  common(str);
  category_flags(str);
  str->add_option("--baseline-words", o.baseline_words);
  str->add_option("--resamples", o.resamples);

  auto* rep = app.add_subcommand("report", "Decomposition of a dimension, category or word");
  common(rep);
  category_flags(rep);
  rep->add_option("--axis", o.axis, "dimension, category or word");
  rep->add_option("--index", o.index);
  rep->add_option("--category", o.category);
  rep->add_option("--word", o.word);
  rep->add_option("--top", o.top);
  rep->add_option("--state", o.state);

  auto* ret = app.add_subcommand("retrieval", "Category word retrieval test");
  common(ret);
  category_flags(ret);
  ret->add_option("--ks", o.ks);
  ret->add_option("--repeats", o.repeats);
  ret->add_option("--split", o.split);
  ret->add_option("--variant", o.variant, "finalized or raw");

  auto* itp = app.add_subcommand("interpretability", "Interpretability scores over a lambda sweep");
  common(itp);
  category_flags(itp);
  itp->add_option("--space", o.space, "embedding, random, bhattacharyya or centers");
  itp->add_option("--lambda", o.lambdas, "e.g. 1-10 or 1,5");
  itp->add_option("--dim", o.dim, "Dimension of the random space");

  auto* stu = app.add_subcommand("study", "Category/word subsampling study");
  common(stu);
  category_flags(stu);
  stu->add_option("--spaces", o.spaces);
  stu->add_option("--coverage", o.coverage);
  stu->add_option("--counts", o.counts);
  stu->add_option("--repeats", o.repeats);
  stu->add_option("--lambda", o.lambda);
  stu->add_option("--distance", o.distance, "euclidean or cosine");

  auto* rnd = app.add_subcommand("random-embedding", "Write a seeded standard-normal embedding");
  common(rnd);
  rnd->add_option("--rows", o.rows);
  rnd->add_option("--dim", o.dim);
  rnd->add_option("--vocab-from", o.vocab_from, "Take the vocabulary from this embedding");
  rnd->add_option("--output", o.output, "File name inside --out");

  try {
    args = expand_config(std::move(args));
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    err << SEMDECOMP_VERSION << '\n';
    return 0;
  } catch (const CLI::ParseError& ex) {
    err << "usage error: " << ex.what() << '\n';
    return 2;
  } catch (const UsageError& ex) {
    err << "usage error: " << ex.what() << '\n';
    return 2;
  }

  set_thread_count(o.threads);
  try {
    if (pre->parsed()) return cmd_preprocess(o);
    if (nor->parsed()) return cmd_normality(o);
    if (dec->parsed()) return cmd_decompose(o);
    if (prj->parsed()) return cmd_project(o);
    if (str->parsed()) return cmd_strengths(o);
    if (rep->parsed()) return cmd_report(o);
    if (ret->parsed()) return cmd_retrieval(o);
    if (itp->parsed()) return cmd_interpretability(o);
    if (stu->parsed()) return cmd_study(o);
    if (rnd->parsed()) return cmd_random_embedding(o);
  } catch (const UsageError& ex) {
    err << "usage error: " << ex.what() << '\n';
    return 2;
  } catch (const InvalidArgument& ex) {
    err << "usage error: " << ex.what() << '\n';
    return 2;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace semdecomp::cli
