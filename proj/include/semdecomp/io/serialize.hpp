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

#include <json.hpp>

#include <istream>
#include <string>
#include <vector>

#include "semdecomp/decomposition_report.hpp"
#include "semdecomp/error.hpp"
#include "semdecomp/interpretability.hpp"
#include "semdecomp/io/csv.hpp"
#include "semdecomp/io/format.hpp"
#include "semdecomp/ks.hpp"
#include "semdecomp/projection.hpp"
#include "semdecomp/retrieval.hpp"
#include "semdecomp/strengths.hpp"
#include "semdecomp/study.hpp"
#include "semdecomp/weights.hpp"

namespace semdecomp::io {

using nlohmann::json;

// Header `dim,<category...>`, then one row per embedding dimension.
inline std::string weights_csv(const CategoryWeightMatrix& w) {
  std::vector<std::string> header{"dim"};
  header.insert(header.end(), w.names.begin(), w.names.end());
  std::string out = csv_row(header);
  for (std::size_t i = 0; i < w.dims(); ++i) {
    out += std::to_string(i);
    for (std::size_t j = 0; j < w.categories(); ++j) {
      out += ',';
      append_double(out, w.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
    }
    out += '\n';
  }
  return out;
}

inline std::string signs_csv(const CategoryWeightMatrix& w) {
  std::vector<std::string> header{"dim"};
  header.insert(header.end(), w.names.begin(), w.names.end());
  std::string out = csv_row(header);
  for (Eigen::Index i = 0; i < w.signs.rows(); ++i) {
    out += std::to_string(i);
    for (Eigen::Index j = 0; j < w.signs.cols(); ++j) out += w.signs(i, j) < 0 ? ",-1" : ",1";
    out += '\n';
  }
  return out;
}

inline json weights_sidecar(const CategoryWeightMatrix& w) {
  return {{"state", std::string(to_string(w.state))},
          {"metric", std::string(to_string(w.metric))},
          {"dims", w.dims()},
          {"categories", w.categories()},
          {"layout", "rows=dimensions,columns=categories"},
          {"clamped_cells", w.clamped_cells}};
}

// Inverse of weights_csv; state and metric come from the sidecar.
inline CategoryWeightMatrix read_weights_csv(std::istream& in, const json& sidecar,
                                             const std::string& source = "<weights>") {
  std::vector<std::string> fields;
  if (!read_csv_record(in, fields) || fields.empty() || fields[0] != "dim")
    throw DataError(source, 1, "expected header starting with 'dim'");
  CategoryWeightMatrix w;
  w.names.assign(fields.begin() + 1, fields.end());
  std::vector<std::vector<double>> rows;
  std::size_t line = 1;
  while (read_csv_record(in, fields)) {
    ++line;
    if (fields.size() == 1 && fields[0].empty()) continue;
    if (fields.size() != w.names.size() + 1) throw DataError(source, line, "wrong number of columns");
    auto idx = parse_int<std::size_t>(fields[0]);
    if (!idx || *idx != rows.size()) throw DataError(source, line, "dimension index out of sequence");
    std::vector<double> row;
    for (std::size_t c = 1; c < fields.size(); ++c) {
      auto v = parse_double(fields[c]);
      if (!v || !std::isfinite(*v)) throw DataError(source, line, "bad weight value '" + fields[c] + "'");
      row.push_back(*v);
    }
    rows.push_back(std::move(row));
  }
  w.values.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(w.names.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < w.names.size(); ++j)
      w.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  auto state = parse_state(sidecar.value("state", "raw"));
  auto metric = parse_metric(sidecar.value("metric", "bhattacharyya"));
  if (!state || !metric) throw DataError(source + ": sidecar has an unknown state or metric");
  w.state = *state;
  w.metric = *metric;
  w.clamped_cells = sidecar.value("clamped_cells", std::size_t{0});
  return w;
}

// Header `word,<label...>`.
inline std::string space_csv(const SemanticSpace& s) {
  std::vector<std::string> header{"word"};
  header.insert(header.end(), s.labels().begin(), s.labels().end());
  std::string out = csv_row(header);
  for (std::size_t r = 0; r < s.rows(); ++r) {
    out += csv_field(s.vocab()[r]);
    for (std::size_t c = 0; c < s.dim(); ++c) {
      out += ',';
      append_double(out, s.values()(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)));
    }
    out += '\n';
  }
  return out;
}

inline std::string normality_csv(const NormalityReport& rep) {
  std::string out = "dim,statistic,p_value,normal\n";
  for (std::size_t i = 0; i < rep.dims(); ++i) {
    out += std::to_string(i) + ',';
    append_double(out, rep.statistic[i]);
    out += ',';
    append_double(out, rep.p_value[i]);
    out += rep.normal[i] ? ",true\n" : ",false\n";
  }
  return out;
}

inline std::string retrieval_csv(const RetrievalReport& rep) {
  std::string out = "k,multiplier,mean_accuracy,std_accuracy\n";
  for (const auto& c : rep.cells) {
    out += std::to_string(c.k) + ',' + std::to_string(c.multiplier) + ',';
    append_double(out, c.mean_accuracy);
    out += ',';
    append_double(out, c.std_accuracy);
    out += '\n';
  }
  return out;
}

inline json retrieval_json(const RetrievalReport& rep) {
  json cells = json::array();
  for (const auto& c : rep.cells)
    cells.push_back({{"k", c.k},
                     {"multiplier", c.multiplier},
                     {"mean_accuracy", c.mean_accuracy},
                     {"std_accuracy", c.std_accuracy},
                     {"per_repetition", c.per_repetition}});
  return {{"metric", std::string(to_string(rep.options.metric))},
          {"variant", rep.options.variant == BhattacharyyaVariant::finalized ? "finalized" : "raw"},
          {"seed", rep.options.seed},
          {"repeats", rep.options.repeats},
          {"split", rep.options.split},
          {"skipped_categories", rep.skipped},
          {"cells", cells}};
}

inline std::string interpretability_csv(const std::vector<InterpretabilityReport>& reports) {
  std::string out = "space,lambda,IS\n";
  for (const auto& r : reports) {
    out += csv_field(r.space) + ',' + std::to_string(r.lambda) + ',';
    append_double(out, r.overall);
    out += '\n';
  }
  return out;
}

inline json interpretability_json(const std::vector<InterpretabilityReport>& reports,
                                  const std::vector<std::string>& category_names) {
  json out = json::array();
  for (const auto& r : reports) {
    json dims = json::array();
    for (const auto& d : r.dims)
      dims.push_back({{"IS", d.score},
                      {"category", category_names.at(d.category)},
                      {"direction", d.direction == Direction::positive ? "+" : "-"}});
    out.push_back({{"space", r.space},
                   {"lambda", r.lambda},
                   {"IS", r.overall},
                   {"clipped_pairs", r.clipped_pairs},
                   {"dimensions", dims}});
  }
  return out;
}

inline std::string study_csv(const SubsampleStudyReport& rep) {
  std::string out = "space,coverage_pct,num_categories,mean_IS\n";
  for (const auto& c : rep.cells) {
    out += csv_field(c.space) + ',';
    append_double(out, c.coverage);
    out += ',' + std::to_string(c.categories) + ',';
    append_double(out, c.mean_is);
    out += '\n';
  }
  return out;
}

inline std::string strengths_csv(const StrengthReport& rep) {
  std::string out = "rank,category,total,baseline\n";
  for (std::size_t r = 0; r < rep.ranked.size(); ++r) {
    out += std::to_string(r + 1) + ',' + csv_field(rep.ranked[r].name) + ',';
    append_double(out, rep.ranked[r].total);
    out += ',';
    append_double(out, rep.baseline);
    out += '\n';
  }
  return out;
}

inline std::string report_csv(const std::vector<ReportEntry>& entries) {
  std::string out = "index,label,weight\n";
  for (const auto& e : entries) {
    out += std::to_string(e.index) + ',' + csv_field(e.label) + ',';
    append_double(out, e.weight);
    out += '\n';
  }
  return out;
}

inline std::string word_report_csv(const std::vector<WordCategoryScore>& entries) {
  std::string out = "category,value,member\n";
  for (const auto& e : entries) {
    out += csv_field(e.category) + ',';
    append_double(out, e.value);
    out += e.member ? ",true\n" : ",false\n";
  }
  return out;
}

}  // namespace semdecomp::io
