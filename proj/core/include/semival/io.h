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

#ifndef SEMIVAL_IO_H_
#define SEMIVAL_IO_H_

#include <string>

#include "semival/game.h"
#include "semival/replication.h"

namespace semival {

// Game files are JSON:
//   {"n_players": int,
//    "valuation": {"type": "table" | "facility" | "coverage" | "synthetic",
//                  ...}}
// Table values are listed in ascending bit-pattern order (coalition {0} at
// index 1). Facility carries "utilities" as rows = facilities; coverage
// carries "element_weights" and per-player "covered" index lists; synthetic
// carries "seed" plus the generator parameters.
GameSpec ParseGameJson(const std::string& json_text);
std::string GameToJson(const GameSpec& game);
GameSpec LoadGame(const std::string& path);
void SaveGame(const GameSpec& game, const std::string& path);

// Utility matrices are CSV with a "d0,d1,..." header and one row per
// facility.
UtilityMatrix ParseUtilityMatrixCsv(const std::string& csv_text);
std::string UtilityMatrixToCsv(const UtilityMatrix& m);
UtilityMatrix LoadUtilityMatrixCsv(const std::string& path);
void SaveUtilityMatrixCsv(const UtilityMatrix& m, const std::string& path);

// {scheme, n, k_max, mode, robust, violations: [{k, p, lhs, rhs}]}
std::string RobustnessVerdictToJson(const WeightScheme& scheme, int n_players,
                                    int k_max, const RobustnessVerdict& verdict);

std::string WeightPropertyReportToJson(int n_players, int k_max,
                                       const WeightPropertyReport& report);

std::string AssumptionReportToJson(const std::string& check_name,
                                   const AssumptionReport& report);

std::string RobustnessModeName(RobustnessMode mode);
RobustnessMode ParseRobustnessMode(const std::string& name);

}  // namespace semival

#endif  // SEMIVAL_IO_H_
