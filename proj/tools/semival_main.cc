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

// Command-line driver: reproducible replication sweeps, robustness reports,
// facility-solver benchmarks, sampler evaluations and assumption checks,
// emitting machine-readable CSV/JSON with a metadata block.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "semival/errors.h"
#include "semival/facility.h"
#include "semival/game.h"
#include "semival/io.h"
#include "semival/payoff.h"
#include "semival/replication.h"
#include "semival/sampling.h"
#include "semival/version.h"

namespace semival {
namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string FormatDouble(double v) {
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, result.ptr);
}

std::string CsvField(const std::string& s) {
  if (s.find(',') == std::string::npos) return s;
  return "\"" + s + "\"";
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<WeightScheme> ParseSchemes(const std::string& text) {
  std::vector<WeightScheme> schemes;
  if (text.rfind("custom:", 0) == 0) {
    // A custom scheme contains commas itself; treat the whole string as one.
    schemes.push_back(WeightScheme::Parse(text));
    return schemes;
  }
  for (const std::string& name : SplitList(text)) {
    schemes.push_back(WeightScheme::Parse(name));
  }
  if (schemes.empty()) {
    throw std::invalid_argument("no schemes given");
  }
  return schemes;
}

void WriteOutput(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write output file: " + out_path);
  }
  out << content;
}

std::string CsvMetadata(const std::string& command, uint64_t seed,
                        const json& config_echo) {
  std::ostringstream os;
  os << "# semival " << kVersion << "\n";
  os << "# command: " << command << "\n";
  os << "# schema: " << kOutputSchemaVersion << "\n";
  os << "# seed: " << seed << "\n";
  os << "# config: " << config_echo.dump() << "\n";
  return os.str();
}

json JsonMetadata(const std::string& command, uint64_t seed,
                  const json& config_echo) {
  json meta;
  meta["tool"] = "semival";
  meta["version"] = kVersion;
  meta["schema"] = kOutputSchemaVersion;
  meta["command"] = command;
  meta["seed"] = seed;
  meta["config"] = config_echo;
  return meta;
}

// Shared game-source options: an explicit file (.json game spec or .csv
// utility matrix) or a seeded generator.
struct GameSource {
  std::string game_path;
  std::string gen;  // "facility" | "synthetic"
  int players = 10;
  int customers = 10;
  std::string gen_mode = "uniform-int";
  int umin = 0;
  int umax = 20;
  int map_size = 50;
  int universe = 0;
  double cover_prob = 0.5;
};

struct GameSourceOptions {
  CLI::Option* game = nullptr;
  CLI::Option* gen = nullptr;
  CLI::Option* players = nullptr;
  CLI::Option* customers = nullptr;
  CLI::Option* gen_mode = nullptr;
  CLI::Option* umin = nullptr;
  CLI::Option* umax = nullptr;
  CLI::Option* map_size = nullptr;
  CLI::Option* universe = nullptr;
  CLI::Option* cover_prob = nullptr;
};

GameSourceOptions AddGameSourceOptions(CLI::App* cmd, GameSource* src) {
  GameSourceOptions opts;
  opts.game = cmd->add_option("--game", src->game_path,
                              "game file (.json game spec or .csv utilities)");
  opts.gen = cmd->add_option("--gen", src->gen,
                             "generator: facility | synthetic");
  opts.players = cmd->add_option("--players", src->players,
                                 "generator player count");
  opts.customers = cmd->add_option("--customers", src->customers,
                                   "facility generator customer count");
  opts.gen_mode = cmd->add_option(
      "--gen-mode", src->gen_mode,
      "facility utilities: uniform-int | manhattan-map");
  opts.umin = cmd->add_option("--umin", src->umin, "uniform-int lower bound");
  opts.umax = cmd->add_option("--umax", src->umax, "uniform-int upper bound");
  opts.map_size = cmd->add_option("--map-size", src->map_size,
                                  "manhattan-map grid size");
  opts.universe = cmd->add_option("--universe", src->universe,
                                  "synthetic universe size (0: 3n)");
  opts.cover_prob = cmd->add_option("--cover-prob", src->cover_prob,
                                    "synthetic cover probability");
  return opts;
}

void GameSourceFromJson(const json& j, const GameSourceOptions& opts,
                        GameSource* src) {
  auto maybe = [&](const char* key, CLI::Option* opt, auto* field) {
    if (opt->count() == 0 && j.contains(key)) {
      *field = j[key].get<std::remove_pointer_t<decltype(field)>>();
    }
  };
  maybe("game", opts.game, &src->game_path);
  maybe("gen", opts.gen, &src->gen);
  maybe("players", opts.players, &src->players);
  maybe("customers", opts.customers, &src->customers);
  maybe("gen_mode", opts.gen_mode, &src->gen_mode);
  maybe("umin", opts.umin, &src->umin);
  maybe("umax", opts.umax, &src->umax);
  maybe("map_size", opts.map_size, &src->map_size);
  maybe("universe", opts.universe, &src->universe);
  maybe("cover_prob", opts.cover_prob, &src->cover_prob);
}

json GameSourceEcho(const GameSource& src) {
  json j;
  if (!src.game_path.empty()) {
    j["game"] = src.game_path;
    return j;
  }
  j["gen"] = src.gen;
  j["players"] = src.players;
  if (src.gen == "facility") {
    j["customers"] = src.customers;
    j["gen_mode"] = src.gen_mode;
    if (src.gen_mode == "uniform-int") {
      j["umin"] = src.umin;
      j["umax"] = src.umax;
    } else {
      j["map_size"] = src.map_size;
    }
  } else {
    j["universe"] = src.universe;
    j["cover_prob"] = src.cover_prob;
  }
  return j;
}

GameSpec LoadGameSource(const GameSource& src, uint64_t seed) {
  if (!src.game_path.empty()) {
    if (src.game_path.size() > 4 &&
        src.game_path.substr(src.game_path.size() - 4) == ".csv") {
      return GameSpec::FromFacility(LoadUtilityMatrixCsv(src.game_path));
    }
    return LoadGame(src.game_path);
  }
  if (src.gen == "facility") {
    FacilityGenOptions options;
    if (src.gen_mode == "uniform-int") {
      options.mode = FacilityGenOptions::Mode::kUniformInt;
      options.min_utility = src.umin;
      options.max_utility = src.umax;
    } else if (src.gen_mode == "manhattan-map") {
      options.mode = FacilityGenOptions::Mode::kManhattanMap;
      options.map_size = src.map_size;
    } else {
      throw std::invalid_argument("unknown --gen-mode: " + src.gen_mode);
    }
    return GameSpec::FromFacility(
        GenerateFacilityGame(src.players, src.customers, options, seed));
  }
  if (src.gen == "synthetic") {
    SyntheticParams params;
    params.universe_size = src.universe;
    params.cover_probability = src.cover_prob;
    return GameSpec::Synthetic(src.players, seed, params);
  }
  throw std::invalid_argument(
      "no game source: pass --game FILE or --gen facility|synthetic");
}

json LoadConfigFile(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open config file: " + path);
  }
  json j;
  in >> j;
  return j;
}

// ---------------------------------------------------------------------------
// sweep: replica-total curves phi_tot(k) per scheme.

struct SweepConfig {
  GameSource source;
  std::string schemes = "shapley,banzhaf";
  int player = 0;
  int k_max = 50;
  uint64_t seed = 42;
  std::string out;
  std::string config;
};

int RunSweep(const SweepConfig& cfg) {
  const GameSpec game = LoadGameSource(cfg.source, cfg.seed);
  const std::vector<WeightScheme> schemes = ParseSchemes(cfg.schemes);

  json echo = GameSourceEcho(cfg.source);
  echo["schemes"] = cfg.schemes;
  echo["player"] = cfg.player;
  echo["k_max"] = cfg.k_max;

  std::ostringstream os;
  os << CsvMetadata("sweep", cfg.seed, echo);
  os << "k,scheme,phi_tot,limit\n";
  for (const WeightScheme& scheme : schemes) {
    const std::vector<double> curve =
        TotalPayoffCurve(game, cfg.player, scheme, cfg.k_max);
    std::string limit;
    try {
      limit = FormatDouble(LimitTotalPayoff(game, scheme, cfg.player));
    } catch (const NotDerivedError&) {
      limit = "";
    }
    for (int k = 0; k <= cfg.k_max; ++k) {
      os << k << "," << CsvField(scheme.name()) << ","
         << FormatDouble(curve[k]) << "," << limit << "\n";
    }
  }
  WriteOutput(cfg.out, os.str());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// robustness: prefix-condition verdicts per scheme plus the Shapley weight
// properties.

struct RobustnessConfig {
  int n = 20;
  int k_max = 50;
  std::string schemes = "shapley,banzhaf,loo,robust-shapley";
  std::string mode = "iff";
  uint64_t seed = 42;
  std::string out;
  std::string config;
};

int RunRobustness(const RobustnessConfig& cfg) {
  const std::vector<WeightScheme> schemes = ParseSchemes(cfg.schemes);
  const RobustnessMode mode = ParseRobustnessMode(cfg.mode);

  json echo;
  echo["n"] = cfg.n;
  echo["k_max"] = cfg.k_max;
  echo["schemes"] = cfg.schemes;
  echo["mode"] = cfg.mode;

  json doc;
  doc["meta"] = JsonMetadata("robustness", cfg.seed, echo);
  doc["reports"] = json::array();
  for (const WeightScheme& scheme : schemes) {
    const RobustnessVerdict verdict =
        CheckRobustness(scheme, cfg.n, cfg.k_max, mode);
    doc["reports"].push_back(
        json::parse(RobustnessVerdictToJson(scheme, cfg.n, cfg.k_max, verdict)));
  }
  doc["shapley_weight_properties"] = json::parse(WeightPropertyReportToJson(
      cfg.n, cfg.k_max, ShapleyWeightProperties(cfg.n, cfg.k_max)));
  WriteOutput(cfg.out, doc.dump(2) + "\n");
  return kExitOk;
}

// ---------------------------------------------------------------------------
// facility-bench: closed-form solvers vs full enumeration.

struct FacilityBenchConfig {
  std::string sizes = "10,15,20,50,100";
  int customers = 0;  // 0: same as n
  int naive_cap = 20;
  std::string gen_mode = "uniform-int";
  int umin = 0;
  int umax = 20;
  uint64_t seed = 42;
  std::string out;
  std::string config;
};

int RunFacilityBench(const FacilityBenchConfig& cfg) {
  std::vector<int> sizes;
  for (const std::string& s : SplitList(cfg.sizes)) sizes.push_back(std::stoi(s));
  if (sizes.empty()) throw std::invalid_argument("facility-bench: empty sizes");

  json echo;
  echo["sizes"] = cfg.sizes;
  echo["customers"] = cfg.customers;
  echo["naive_cap"] = cfg.naive_cap;
  echo["gen_mode"] = cfg.gen_mode;

  auto time_it = [](auto&& fn) {
    const auto start = std::chrono::steady_clock::now();
    auto result = fn();
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    return std::make_pair(std::move(result), seconds);
  };

  std::ostringstream os;
  os << CsvMetadata("facility-bench", cfg.seed, echo);
  os << "n,method,value_kind,seconds,max_abs_diff\n";
  for (int n : sizes) {
    const int d = cfg.customers > 0 ? cfg.customers : n;
    FacilityGenOptions options;
    options.min_utility = cfg.umin;
    options.max_utility = cfg.umax;
    const UtilityMatrix m = GenerateFacilityGame(n, d, options, cfg.seed);

    auto [fast_shapley, fast_shapley_s] = time_it([&] { return FastShapley(m); });
    auto [fast_banzhaf, fast_banzhaf_s] = time_it([&] { return FastBanzhaf(m); });

    const bool naive_runs = n <= cfg.naive_cap;
    std::string shapley_diff, banzhaf_diff;
    std::string naive_shapley_s = "skipped", naive_banzhaf_s = "skipped";
    if (naive_runs) {
      const GameSpec game = GameSpec::FromFacility(m);
      auto [naive_shapley, ns_s] = time_it(
          [&] { return ExactPayoffsAll(game, WeightScheme::Shapley(), n); });
      auto [naive_banzhaf, nb_s] = time_it(
          [&] { return ExactPayoffsAll(game, WeightScheme::Banzhaf(), n); });
      double worst_s = 0.0, worst_b = 0.0;
      for (int i = 0; i < n; ++i) {
        worst_s = std::max(worst_s, std::abs(naive_shapley[i] - fast_shapley[i]));
        worst_b = std::max(worst_b, std::abs(naive_banzhaf[i] - fast_banzhaf[i]));
      }
      shapley_diff = FormatDouble(worst_s);
      banzhaf_diff = FormatDouble(worst_b);
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.6f", ns_s);
      naive_shapley_s = buf;
      std::snprintf(buf, sizeof(buf), "%.6f", nb_s);
      naive_banzhaf_s = buf;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", fast_shapley_s);
    os << n << ",fast,shapley," << buf << "," << shapley_diff << "\n";
    std::snprintf(buf, sizeof(buf), "%.6f", fast_banzhaf_s);
    os << n << ",fast,banzhaf," << buf << "," << banzhaf_diff << "\n";
    os << n << ",naive,shapley," << naive_shapley_s << ",\n";
    os << n << ",naive,banzhaf," << naive_banzhaf_s << ",\n";
  }
  WriteOutput(cfg.out, os.str());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sample-eval: sampler estimates against exact payoffs over seeded runs.

struct SampleEvalConfig {
  GameSource source;
  std::string scheme = "shapley";
  std::string budget = "256";
  std::string q = "uniform";
  int runs = 1;
  uint64_t seed = 42;
  std::string out;
  std::string config;
};

int RunSampleEval(const SampleEvalConfig& cfg) {
  GameSource source = cfg.source;
  if (source.game_path.empty() && source.gen.empty()) {
    source.gen = "facility";  // a small default workload
    source.players = 8;
    source.customers = 6;
  }
  const GameSpec game = LoadGameSource(source, cfg.seed);
  const WeightScheme scheme = WeightScheme::Parse(cfg.scheme);
  if (cfg.runs < 1) throw std::invalid_argument("sample-eval: runs must be >= 1");

  const bool exhaustive = cfg.budget == "exhaustive";
  int64_t budget = 0;
  if (!exhaustive) {
    budget = std::stoll(cfg.budget);
  }
  SizeDistribution q = SizeDistribution::Uniform();
  if (cfg.q != "uniform") {
    std::vector<double> weights;
    for (const std::string& w : SplitList(cfg.q)) weights.push_back(std::stod(w));
    q = SizeDistribution::FromWeights(std::move(weights));
  }

  const std::vector<double> exact = ExactPayoffsAll(game, scheme);
  const int n = game.n_players();

  json echo = GameSourceEcho(source);
  echo["scheme"] = cfg.scheme;
  echo["budget"] = cfg.budget;
  echo["q"] = cfg.q;
  echo["runs"] = cfg.runs;

  std::ostringstream os;
  os << CsvMetadata("sample-eval", cfg.seed, echo);
  os << "player,exact,phi_hat,phi_prime,rel_error\n";
  std::vector<double> run_errors;
  int failed = 0;
  for (int r = 0; r < cfg.runs; ++r) {
    const uint64_t run_seed = cfg.seed + static_cast<uint64_t>(r);
    os << "# run " << r << " seed=" << run_seed << "\n";
    EstimateSet est;
    try {
      est = exhaustive
                ? ApproximateSemivalueExhaustive(game, scheme)
                : ApproximateSemivalue(game, scheme, budget, q, run_seed);
    } catch (const CoverageError& e) {
      ++failed;
      os << "# run " << r << " coverage-error: " << e.what() << "\n";
      continue;
    }
    double mean_rel = 0.0;
    for (int i = 0; i < n; ++i) {
      const double rel = std::abs(est.phi_prime[i] - exact[i]) /
                         std::max(std::abs(exact[i]), 1e-12);
      mean_rel += rel / n;
      os << i << "," << FormatDouble(exact[i]) << ","
         << FormatDouble(est.phi_hat[i]) << ","
         << FormatDouble(est.phi_prime[i]) << "," << FormatDouble(rel)
         << "\n";
    }
    run_errors.push_back(mean_rel);
  }
  if (!run_errors.empty()) {
    const double mean =
        std::accumulate(run_errors.begin(), run_errors.end(), 0.0) /
        run_errors.size();
    double var = 0.0;
    for (double e : run_errors) var += (e - mean) * (e - mean);
    var = run_errors.size() > 1 ? var / (run_errors.size() - 1) : 0.0;
    os << "# aggregate runs=" << cfg.runs << " ok=" << run_errors.size()
       << " failed=" << failed << " mean_rel_error=" << FormatDouble(mean)
       << " std_rel_error=" << FormatDouble(std::sqrt(var)) << "\n";
  } else {
    os << "# aggregate runs=" << cfg.runs << " ok=0 failed=" << failed << "\n";
  }
  WriteOutput(cfg.out, os.str());
  if (run_errors.empty()) {
    std::cerr << "sample-eval: every run failed coverage\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify: structural assumption checks on a game file.

struct VerifyConfig {
  GameSource source;
  std::string check = "submodularity";  // submodularity | redundancy | both
  std::string replicas;
  double tolerance = kDefaultTolerance;
  uint64_t seed = 42;
  std::string out;
  std::string config;
};

int RunVerify(const VerifyConfig& cfg) {
  const GameSpec game = LoadGameSource(cfg.source, cfg.seed);
  const bool check_sub =
      cfg.check == "submodularity" || cfg.check == "both";
  const bool check_red = cfg.check == "redundancy" || cfg.check == "both";
  if (!check_sub && !check_red) {
    throw std::invalid_argument("verify: --check must be submodularity, "
                                "redundancy or both");
  }

  json echo = GameSourceEcho(cfg.source);
  echo["check"] = cfg.check;
  echo["tolerance"] = cfg.tolerance;
  if (!cfg.replicas.empty()) echo["replicas"] = cfg.replicas;

  json doc;
  doc["meta"] = JsonMetadata("verify", cfg.seed, echo);
  doc["reports"] = json::array();
  bool all_hold = true;
  if (check_sub) {
    const AssumptionReport report = VerifySubmodularity(game, cfg.tolerance);
    all_hold = all_hold && report.holds;
    doc["reports"].push_back(
        json::parse(AssumptionReportToJson("submodularity", report)));
  }
  if (check_red) {
    if (cfg.replicas.empty()) {
      throw std::invalid_argument(
          "verify: --replicas is required for the redundancy check");
    }
    std::vector<int> replicas;
    for (const std::string& r : SplitList(cfg.replicas)) {
      replicas.push_back(std::stoi(r));
    }
    const AssumptionReport report =
        VerifyReplicationRedundancy(game, replicas, cfg.tolerance);
    all_hold = all_hold && report.holds;
    doc["reports"].push_back(
        json::parse(AssumptionReportToJson("replication-redundancy", report)));
  }
  WriteOutput(cfg.out, doc.dump(2) + "\n");
  return all_hold ? kExitOk : kExitCheckFailed;
}

int Main(int argc, char** argv) {
  CLI::App app{"semivalue payoff allocation for submodular cooperative games"};
  app.set_version_flag("--version", std::string("semival ") + kVersion);
  app.require_subcommand(1);

  // sweep ------------------------------------------------------------------
  SweepConfig sweep;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "replica-total payoff curve over replication counts");
  GameSourceOptions sweep_src = AddGameSourceOptions(sweep_cmd, &sweep.source);
  CLI::Option* sweep_schemes =
      sweep_cmd->add_option("--schemes", sweep.schemes, "comma-separated");
  CLI::Option* sweep_player =
      sweep_cmd->add_option("--player", sweep.player, "malicious player");
  CLI::Option* sweep_kmax = sweep_cmd->add_option("--k-max", sweep.k_max);
  CLI::Option* sweep_seed = sweep_cmd->add_option("--seed", sweep.seed);
  CLI::Option* sweep_out = sweep_cmd->add_option("--out", sweep.out);
  sweep_cmd->add_option("--config", sweep.config, "JSON config file");
  std::string sweep_format = "csv";
  sweep_cmd->add_option("--format", sweep_format, "output format")
      ->check(CLI::IsMember({"csv"}));

  // robustness ---------------------------------------------------------------
  RobustnessConfig rob;
  CLI::App* rob_cmd = app.add_subcommand(
      "robustness", "prefix-condition verdicts and weight properties");
  CLI::Option* rob_n = rob_cmd->add_option("--n", rob.n, "player count");
  CLI::Option* rob_kmax = rob_cmd->add_option("--k-max", rob.k_max);
  CLI::Option* rob_schemes = rob_cmd->add_option("--schemes", rob.schemes);
  CLI::Option* rob_mode = rob_cmd->add_option(
      "--mode", rob.mode, "iff | monotone-decrease | monotone-increase");
  CLI::Option* rob_seed = rob_cmd->add_option("--seed", rob.seed);
  CLI::Option* rob_out = rob_cmd->add_option("--out", rob.out);
  rob_cmd->add_option("--config", rob.config, "JSON config file");
  std::string rob_format = "json";
  rob_cmd->add_option("--format", rob_format, "output format")
      ->check(CLI::IsMember({"json"}));

  // facility-bench -----------------------------------------------------------
  FacilityBenchConfig bench;
  CLI::App* bench_cmd = app.add_subcommand(
      "facility-bench", "closed-form facility solvers vs full enumeration");
  CLI::Option* bench_sizes = bench_cmd->add_option("--sizes", bench.sizes);
  CLI::Option* bench_customers =
      bench_cmd->add_option("--customers", bench.customers, "0: same as n");
  CLI::Option* bench_cap =
      bench_cmd->add_option("--naive-cap", bench.naive_cap,
                            "skip enumeration above this player count");
  CLI::Option* bench_seed = bench_cmd->add_option("--seed", bench.seed);
  CLI::Option* bench_out = bench_cmd->add_option("--out", bench.out);
  bench_cmd->add_option("--config", bench.config, "JSON config file");

  // sample-eval ---------------------------------------------------------------
  SampleEvalConfig sample;
  CLI::App* sample_cmd = app.add_subcommand(
      "sample-eval", "sampler estimates against exact payoffs");
  GameSourceOptions sample_src =
      AddGameSourceOptions(sample_cmd, &sample.source);
  CLI::Option* sample_scheme = sample_cmd->add_option("--scheme", sample.scheme);
  CLI::Option* sample_budget = sample_cmd->add_option(
      "--budget", sample.budget, "draw count or 'exhaustive'");
  CLI::Option* sample_q =
      sample_cmd->add_option("--q", sample.q,
                             "'uniform' or n+1 size weights w0,w1,...,wn");
  CLI::Option* sample_runs = sample_cmd->add_option("--runs", sample.runs);
  CLI::Option* sample_seed = sample_cmd->add_option("--seed", sample.seed);
  CLI::Option* sample_out = sample_cmd->add_option("--out", sample.out);
  sample_cmd->add_option("--config", sample.config, "JSON config file");

  // verify ---------------------------------------------------------------------
  VerifyConfig verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "structural assumption checks");
  GameSourceOptions verify_src =
      AddGameSourceOptions(verify_cmd, &verify.source);
  CLI::Option* verify_check = verify_cmd->add_option(
      "--check", verify.check, "submodularity | redundancy | both");
  CLI::Option* verify_replicas = verify_cmd->add_option(
      "--replicas", verify.replicas, "comma-separated replica indices");
  CLI::Option* verify_tol =
      verify_cmd->add_option("--tolerance", verify.tolerance);
  CLI::Option* verify_seed = verify_cmd->add_option("--seed", verify.seed);
  CLI::Option* verify_out = verify_cmd->add_option("--out", verify.out);
  verify_cmd->add_option("--config", verify.config, "JSON config file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto maybe = [](const json& j, const char* key, CLI::Option* opt,
                  auto* field) {
    if (opt->count() == 0 && j.contains(key)) {
      *field = j[key].get<std::remove_pointer_t<decltype(field)>>();
    }
  };

  if (sweep_cmd->parsed()) {
    const json j = LoadConfigFile(sweep.config);
    GameSourceFromJson(j, sweep_src, &sweep.source);
    maybe(j, "schemes", sweep_schemes, &sweep.schemes);
    maybe(j, "player", sweep_player, &sweep.player);
    maybe(j, "k_max", sweep_kmax, &sweep.k_max);
    maybe(j, "seed", sweep_seed, &sweep.seed);
    maybe(j, "out", sweep_out, &sweep.out);
    return RunSweep(sweep);
  }
  if (rob_cmd->parsed()) {
    const json j = LoadConfigFile(rob.config);
    maybe(j, "n", rob_n, &rob.n);
    maybe(j, "k_max", rob_kmax, &rob.k_max);
    maybe(j, "schemes", rob_schemes, &rob.schemes);
    maybe(j, "mode", rob_mode, &rob.mode);
    maybe(j, "seed", rob_seed, &rob.seed);
    maybe(j, "out", rob_out, &rob.out);
    return RunRobustness(rob);
  }
  if (bench_cmd->parsed()) {
    const json j = LoadConfigFile(bench.config);
    maybe(j, "sizes", bench_sizes, &bench.sizes);
    maybe(j, "customers", bench_customers, &bench.customers);
    maybe(j, "naive_cap", bench_cap, &bench.naive_cap);
    maybe(j, "seed", bench_seed, &bench.seed);
    maybe(j, "out", bench_out, &bench.out);
    return RunFacilityBench(bench);
  }
  if (sample_cmd->parsed()) {
    const json j = LoadConfigFile(sample.config);
    GameSourceFromJson(j, sample_src, &sample.source);
    maybe(j, "scheme", sample_scheme, &sample.scheme);
    maybe(j, "budget", sample_budget, &sample.budget);
    maybe(j, "q", sample_q, &sample.q);
    maybe(j, "runs", sample_runs, &sample.runs);
    maybe(j, "seed", sample_seed, &sample.seed);
    maybe(j, "out", sample_out, &sample.out);
    return RunSampleEval(sample);
  }
  if (verify_cmd->parsed()) {
    const json j = LoadConfigFile(verify.config);
    GameSourceFromJson(j, verify_src, &verify.source);
    maybe(j, "check", verify_check, &verify.check);
    maybe(j, "replicas", verify_replicas, &verify.replicas);
    maybe(j, "tolerance", verify_tol, &verify.tolerance);
    maybe(j, "seed", verify_seed, &verify.seed);
    maybe(j, "out", verify_out, &verify.out);
    return RunVerify(verify);
  }
  return kExitUsage;
}

}  // namespace
}  // namespace semival

int main(int argc, char** argv) {
  try {
    return semival::Main(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return semival::kExitUsage;
  }
}
