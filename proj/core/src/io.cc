// Copyright 2026 The Semival Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "semival/io.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace semival {

namespace {

using nlohmann::json;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open file: " + path);
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write file: " + path);
  }
  out << content;
}

}  // namespace

GameSpec ParseGameJson(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("game file is not valid JSON: ") +
                             e.what());
  }
  if (!doc.contains("n_players") || !doc.contains("valuation")) {
    throw std::runtime_error(
        "game file needs \"n_players\" and \"valuation\" fields");
  }
  const int n = doc["n_players"].get<int>();
  const json& val = doc["valuation"];
  const std::string type = val.at("type").get<std::string>();
  if (type == "table") {
    return GameSpec::FromTable(n, val.at("values").get<std::vector<double>>());
  }
  if (type == "facility") {
    auto rows = val.at("utilities").get<std::vector<std::vector<double>>>();
    UtilityMatrix m = UtilityMatrix::FromRows(rows);
    if (m.num_facilities() != n) {
      throw std::runtime_error(
          "facility game: utilities row count must equal n_players");
    }
    return GameSpec::FromFacility(std::move(m));
  }
  if (type == "coverage") {
    CoverageData data;
    data.element_weights =
        val.at("element_weights").get<std::vector<double>>();
    data.covered = val.at("covered").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(data.covered.size()) != n) {
      throw std::runtime_error(
          "coverage game: covered list count must equal n_players");
    }
    return GameSpec::FromCoverage(std::move(data));
  }
  if (type == "synthetic") {
    SyntheticParams params;
    if (val.contains("universe_size")) {
      params.universe_size = val["universe_size"].get<int>();
    }
    if (val.contains("cover_probability")) {
      params.cover_probability = val["cover_probability"].get<double>();
    }
    if (val.contains("weight_scale")) {
      params.weight_scale = val["weight_scale"].get<double>();
    }
    return GameSpec::Synthetic(n, val.at("seed").get<uint64_t>(), params);
  }
  throw std::runtime_error("unknown valuation type: " + type);
}

std::string GameToJson(const GameSpec& game) {
  json val;
  switch (game.kind()) {
    case ValuationKind::kTable:
      val["type"] = "table";
      val["values"] = *game.table();
      break;
    case ValuationKind::kFacility: {
      val["type"] = "facility";
      const UtilityMatrix& m = *game.facility();
      std::vector<std::vector<double>> rows(m.num_facilities());
      for (int i = 0; i < m.num_facilities(); ++i) {
        rows[i].resize(m.num_customers());
        for (int d = 0; d < m.num_customers(); ++d) rows[i][d] = m.at(i, d);
      }
      val["utilities"] = rows;
      break;
    }
    case ValuationKind::kCoverage:
      val["type"] = "coverage";
      val["element_weights"] = game.coverage()->element_weights;
      val["covered"] = game.coverage()->covered;
      break;
    case ValuationKind::kSynthetic:
      val["type"] = "synthetic";
      val["seed"] = game.synthetic()->seed;
      val["universe_size"] = game.synthetic()->params.universe_size;
      val["cover_probability"] = game.synthetic()->params.cover_probability;
      val["weight_scale"] = game.synthetic()->params.weight_scale;
      break;
  }
  json doc;
  doc["n_players"] = game.n_players();
  doc["valuation"] = val;
  return doc.dump(2);
}

GameSpec LoadGame(const std::string& path) {
  return ParseGameJson(ReadFile(path));
}

void SaveGame(const GameSpec& game, const std::string& path) {
  WriteFile(path, GameToJson(game) + "\n");
}

UtilityMatrix ParseUtilityMatrixCsv(const std::string& csv_text) {
  std::istringstream in(csv_text);
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("utility CSV: empty file");
  }
  if (line.rfind("d0", 0) != 0) {
    throw std::runtime_error("utility CSV: header must start with d0");
  }
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      row.push_back(std::stod(cell));
    }
    rows.push_back(std::move(row));
  }
  return UtilityMatrix::FromRows(rows);
}

std::string UtilityMatrixToCsv(const UtilityMatrix& m) {
  std::ostringstream os;
  os.precision(17);
  for (int d = 0; d < m.num_customers(); ++d) {
    if (d > 0) os << ",";
    os << "d" << d;
  }
  os << "\n";
  for (int i = 0; i < m.num_facilities(); ++i) {
    for (int d = 0; d < m.num_customers(); ++d) {
      if (d > 0) os << ",";
      os << m.at(i, d);
    }
    os << "\n";
  }
  return os.str();
}

UtilityMatrix LoadUtilityMatrixCsv(const std::string& path) {
  return ParseUtilityMatrixCsv(ReadFile(path));
}

void SaveUtilityMatrixCsv(const UtilityMatrix& m, const std::string& path) {
  WriteFile(path, UtilityMatrixToCsv(m));
}

std::string RobustnessModeName(RobustnessMode mode) {
  switch (mode) {
    case RobustnessMode::kIffCondition:
      return "iff";
    case RobustnessMode::kMonotoneDecrease:
      return "monotone-decrease";
    case RobustnessMode::kMonotoneIncrease:
      return "monotone-increase";
  }
  return "";
}

RobustnessMode ParseRobustnessMode(const std::string& name) {
  if (name == "iff") return RobustnessMode::kIffCondition;
  if (name == "monotone-decrease") return RobustnessMode::kMonotoneDecrease;
  if (name == "monotone-increase") return RobustnessMode::kMonotoneIncrease;
  throw std::invalid_argument("unknown robustness mode: " + name);
}

std::string RobustnessVerdictToJson(const WeightScheme& scheme, int n_players,
                                    int k_max,
                                    const RobustnessVerdict& verdict) {
  json doc;
  doc["scheme"] = scheme.name();
  doc["n"] = n_players;
  doc["k_max"] = k_max;
  doc["mode"] = RobustnessModeName(verdict.mode);
  doc["robust"] = verdict.robust;
  doc["violations"] = json::array();
  for (const PrefixViolation& v : verdict.failing) {
    doc["violations"].push_back(
        {{"k", v.k}, {"p", v.p}, {"lhs", v.lhs}, {"rhs", v.rhs}});
  }
  return doc.dump(2);
}

std::string WeightPropertyReportToJson(int n_players, int k_max,
                                       const WeightPropertyReport& report) {
  json doc;
  doc["n"] = n_players;
  doc["k_max"] = k_max;
  doc["sums_to_one"] = report.sums_to_one;
  doc["prefix_monotone"] = report.prefix_monotone;
  doc["increments_diminishing"] = report.increments_diminishing;
  doc["max_abs_violation"] = report.max_abs_violation;
  return doc.dump(2);
}

std::string AssumptionReportToJson(const std::string& check_name,
                                   const AssumptionReport& report) {
  json doc;
  doc["check"] = check_name;
  doc["holds"] = report.holds;
  if (report.witness) {
    const AssumptionWitness& w = *report.witness;
    doc["witness"] = {{"player", w.player},
                      {"inner", w.inner.ToString()},
                      {"outer", w.outer.ToString()},
                      {"inner_value", w.inner_value},
                      {"outer_value", w.outer_value},
                      {"slack", w.slack},
                      {"description", w.Describe()}};
  }
  return doc.dump(2);
}

}  // namespace semival
