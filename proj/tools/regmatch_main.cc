// Copyright 2026 The regmatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: generate games, run the adaptive procedure, compare
// the clipped and softmax derivations, and evaluate alpha of a stored history.
//
// Exit codes: 0 success, 2 usage error, 1 runtime or configuration error.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "regmatch/game.h"
#include "regmatch/game_io.h"
#include "regmatch/harness.h"
#include "regmatch/metrics.h"
#include "regmatch/regret.h"
#include "regmatch/report.h"

namespace {

using namespace regmatch;

constexpr const char* kOutputDirEnv = "REGMATCH_OUTPUT_DIR";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Relative output paths land in $REGMATCH_OUTPUT_DIR when it is set.
std::string ResolveOutput(const std::string& path) {
  const char* dir = std::getenv(kOutputDirEnv);
  std::filesystem::path p(path);
  if (dir == nullptr || *dir == '\0' || p.is_absolute()) return path;
  std::filesystem::path resolved = std::filesystem::path(dir) / p;
  std::filesystem::create_directories(resolved.parent_path());
  return resolved.string();
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::string Fnv1a64(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(hash));
  return buffer;
}

struct GameSourceFlags {
  std::string game_file;
  std::vector<int> actions;
  double low = -1000.0;
  double high = 1000.0;
  bool integer_payoffs = false;

  CLI::Option* game_file_opt = nullptr;
  CLI::Option* actions_opt = nullptr;

  void Add(CLI::App& app) {
    game_file_opt = app.add_option("--game-file", game_file, "Game file to load")
                        ->check(CLI::ExistingFile);
    actions_opt = app.add_option("--actions", actions,
                                 "Action count per player, e.g. 3,4")
                      ->delimiter(',')
                      ->check(CLI::PositiveNumber);
    auto* low_opt = app.add_option("--low", low, "Lowest payoff (generated games)");
    auto* high_opt = app.add_option("--high", high, "Highest payoff (generated games)");
    auto* int_opt = app.add_flag("--integer-payoffs", integer_payoffs,
                                 "Draw integer payoffs uniformly from [low, high]");
    for (CLI::Option* opt : {actions_opt, low_opt, high_opt, int_opt}) {
      game_file_opt->excludes(opt);
    }
  }

  // The game seed of a generated game equals the master seed, so generate
  // followed by run --game-file reproduces an inline run.
  std::variant<GameGenSpec, Game> Resolve(std::uint64_t seed) const {
    if (!game_file.empty()) return ReadGameFile(game_file);
    if (actions.empty()) {
      throw UsageError("a game source is required: --game-file or --actions");
    }
    if (!(low < high)) throw UsageError("--low must be smaller than --high");
    return GameGenSpec{actions, low, high, seed, integer_payoffs};
  }
};

struct MuFlags {
  std::optional<double> fixed;
  double safety = 1.0;

  void Add(CLI::App& app) {
    auto* fixed_opt = app.add_option("--mu", fixed, "Fixed normalisation constant mu")
                          ->check(CLI::PositiveNumber);
    app.add_option("--mu-safety", safety,
                   "Safety factor (>= 1) of the automatic mu bound")
        ->check(CLI::Range(1.0, 1e300))
        ->excludes(fixed_opt);
  }

  MuPolicy Resolve() const {
    MuPolicy policy;
    if (fixed) {
      policy.mode = MuPolicy::Mode::kFixed;
      policy.fixed_value = *fixed;
    }
    policy.safety_factor = safety;
    return policy;
  }
};

void CheckSchedule(std::int64_t iterations, std::int64_t measure_every) {
  if (measure_every > iterations) {
    throw UsageError("--measure-every must not exceed -T");
  }
}

int Generate(const GameSourceFlags& source, std::uint64_t seed,
             const std::string& output) {
  if (source.actions.empty()) throw UsageError("--actions is required");
  if (!(source.low < source.high)) throw UsageError("--low must be smaller than --high");
  const Game game = GenerateRandomGame(
      GameGenSpec{source.actions, source.low, source.high, seed, source.integer_payoffs});
  const std::string text = SerializeGame(game);
  const std::string path = ResolveOutput(output);
  WriteText(path, text);
  std::cout << path << " fnv1a64=" << Fnv1a64(text) << "\n";
  return 0;
}

struct RunFlags {
  std::string method = "original";
  std::int64_t iterations = 1000;
  std::int64_t measure_every = 20;
  std::uint64_t seed = 0;
  std::string initial_policy;
  std::string output = "trace.csv";
  std::string meta;
  std::string history_out;
  std::int64_t dump_regrets_every = 0;
  std::string regrets_out;
  bool with_argmax = false;
};

int Run(const GameSourceFlags& source, const MuFlags& mu, const RunFlags& flags) {
  CheckSchedule(flags.iterations, flags.measure_every);
  ExperimentConfig config;
  config.game_source = source.Resolve(flags.seed);
  config.method = ParseMethod(flags.method);
  config.iterations = flags.iterations;
  config.measure_every = flags.measure_every;
  config.seed = flags.seed;
  config.mu = mu.Resolve();
  config.regret_dump_every = flags.dump_regrets_every;
  config.record_history = !flags.history_out.empty();
  if (!flags.initial_policy.empty()) {
    try {
      config.initial_policy = ParsePolicyList(flags.initial_policy);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--initial-policy: ") + e.what());
    }
  }

  const ExperimentTrace trace = RunSimulation(config);
  const std::string trace_path = ResolveOutput(flags.output);
  WriteText(trace_path, TraceCsv(trace, flags.with_argmax));
  WriteText(flags.meta.empty() ? trace_path + ".meta.json" : ResolveOutput(flags.meta),
            TraceMetadataJson(trace));
  if (flags.dump_regrets_every > 0) {
    WriteText(flags.regrets_out.empty() ? trace_path + ".regrets.txt"
                                        : ResolveOutput(flags.regrets_out),
              RegretDumpText(trace));
  }
  if (!flags.history_out.empty()) {
    WriteText(ResolveOutput(flags.history_out), HistoryCsv(trace.history));
  }
  const double alpha = trace.rows.back().alpha;
  std::cout << trace_path << "\n"
            << "final alpha " << FormatReal(alpha) << " distance "
            << FormatReal(std::max(alpha, 0.0)) << "\n";
  return 0;
}

struct CompareFlags {
  std::string seeds;
  std::int64_t iterations = 1000;
  std::int64_t measure_every = 20;
  std::string first = "original";
  std::string second = "softmax";
  std::string output = "compare.csv";
  std::string summary;
  unsigned threads = 0;
};

int Compare(const GameSourceFlags& source, const MuFlags& mu,
            const CompareFlags& flags) {
  CheckSchedule(flags.iterations, flags.measure_every);
  std::vector<std::uint64_t> seeds;
  try {
    seeds = ParseSeedList(flags.seeds);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--seeds: ") + e.what());
  }
  ExperimentConfig base;
  base.game_source = source.Resolve(seeds.front());
  base.iterations = flags.iterations;
  base.measure_every = flags.measure_every;
  base.mu = mu.Resolve();

  const ComparisonSummary summary = CompareMethods(
      base, seeds, ParseMethod(flags.first), ParseMethod(flags.second), flags.threads);

  std::string traces = TraceCsvHeader();
  for (const SeedComparison& s : summary.per_seed) {
    traces += TraceCsvRows(s.first) + TraceCsvRows(s.second);
  }
  const std::string trace_path = ResolveOutput(flags.output);
  WriteText(trace_path, traces);
  const std::string table = ComparisonSummaryCsv(summary);
  WriteText(flags.summary.empty() ? trace_path + ".summary.csv"
                                  : ResolveOutput(flags.summary),
            table);

  std::size_t wins = 0;
  for (const SeedComparison& s : summary.per_seed) wins += s.auc_second < s.auc_first;
  std::cout << table << MethodName(summary.second) << " AUC lower than "
            << MethodName(summary.first) << " in " << wins << "/"
            << summary.per_seed.size() << " seeds (fraction "
            << FormatReal(summary.second_wins_fraction) << ")\n";
  return 0;
}

int Eval(const std::string& game_file, const std::string& history_file,
         bool triples) {
  const Game game = ReadGameFile(game_file);
  std::ifstream in(history_file);
  if (!in) throw std::runtime_error("cannot open history '" + history_file + "'");
  std::vector<PureProfile> history;
  try {
    history = ParseHistoryCsv(in);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (history.empty()) throw UsageError("history file holds no profiles");

  EmpiricalDistribution record(game.ActionCounts());
  for (std::size_t line = 0; line < history.size(); ++line) {
    try {
      game.CheckProfile(history[line]);
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("history profile " + std::to_string(line + 1) +
                               " does not fit the game: " + e.what());
    }
    record.Record(history[line]);
  }
  const AlphaReport report = ComputeAlphaReport(game, record);
  if (triples) std::cout << AlphaReportCsv(report);
  std::cout << "alpha " << FormatReal(report.alpha) << "\n"
            << "alpha_clamped " << FormatReal(std::max(report.alpha, 0.0)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regret matching toward correlated equilibrium in normal-form games"};
  app.require_subcommand(1);

  auto* generate = app.add_subcommand("generate", "Generate a random game file");
  GameSourceFlags generate_source;
  std::uint64_t generate_seed = 0;
  std::string generate_output = "game.json";
  generate->add_option("--actions", generate_source.actions,
                       "Action count per player, e.g. 3,4")
      ->delimiter(',')
      ->check(CLI::PositiveNumber)
      ->required();
  generate->add_option("--low", generate_source.low, "Lowest payoff");
  generate->add_option("--high", generate_source.high, "Highest payoff");
  generate->add_flag("--integer-payoffs", generate_source.integer_payoffs,
                     "Draw integer payoffs uniformly from [low, high]");
  generate->add_option("--seed", generate_seed, "Master seed");
  generate->add_option("-o,--output", generate_output, "Output game file");

  auto* run = app.add_subcommand("run", "Run one experiment and write its alpha trace");
  GameSourceFlags run_source;
  MuFlags run_mu;
  RunFlags run_flags;
  run_source.Add(*run);
  run_mu.Add(*run);
  run->add_option("--method", run_flags.method, "original or softmax")
      ->check(CLI::IsMember({"original", "softmax"}));
  run->add_option("-T,--iterations", run_flags.iterations, "Number of periods")
      ->check(CLI::PositiveNumber);
  run->add_option("--measure-every", run_flags.measure_every,
                  "Measure alpha every this many periods")
      ->check(CLI::PositiveNumber);
  run->add_option("--seed", run_flags.seed, "Master seed");
  run->add_option("--initial-policy", run_flags.initial_policy,
                  "First-period distributions, e.g. '0.5,0.5;0.25,0.25,0.25,0.25'");
  run->add_option("-o,--output", run_flags.output, "Trace CSV path");
  run->add_option("--meta", run_flags.meta, "Metadata sidecar path");
  run->add_option("--history-out", run_flags.history_out,
                  "Write the played profiles as a history CSV");
  run->add_option("--dump-regrets-every", run_flags.dump_regrets_every,
                  "Snapshot regret matrices every N periods")
      ->check(CLI::NonNegativeNumber);
  run->add_option("--regrets-out", run_flags.regrets_out, "Regret dump path");
  run->add_flag("--with-argmax", run_flags.with_argmax,
                "Add the maximising (player, action, deviation) to each row");

  auto* compare = app.add_subcommand("compare", "Compare two methods across seeds");
  GameSourceFlags compare_source;
  MuFlags compare_mu;
  CompareFlags compare_flags;
  compare_source.Add(*compare);
  compare_mu.Add(*compare);
  compare->add_option("--seeds", compare_flags.seeds, "Seeds, e.g. 1,2,3 or 1..20")
      ->required();
  compare->add_option("-T,--iterations", compare_flags.iterations, "Number of periods")
      ->check(CLI::PositiveNumber);
  compare->add_option("--measure-every", compare_flags.measure_every,
                      "Measure alpha every this many periods")
      ->check(CLI::PositiveNumber);
  compare->add_option("--first", compare_flags.first, "Baseline method")
      ->check(CLI::IsMember({"original", "softmax"}));
  compare->add_option("--second", compare_flags.second, "Challenger method")
      ->check(CLI::IsMember({"original", "softmax"}));
  compare->add_option("-o,--output", compare_flags.output, "Combined trace CSV path");
  compare->add_option("--summary", compare_flags.summary, "AUC summary CSV path");
  compare->add_option("--threads", compare_flags.threads, "Worker threads (0 = all cores)");

  auto* eval = app.add_subcommand("eval", "Evaluate alpha of a stored play history");
  std::string eval_game;
  std::string eval_history;
  bool eval_triples = false;
  eval->add_option("--game-file", eval_game, "Game file")->required()->check(
      CLI::ExistingFile);
  eval->add_option("--history", eval_history, "History CSV, one profile per line")
      ->required()
      ->check(CLI::ExistingFile);
  eval->add_flag("--triples", eval_triples, "Print every (player, action, deviation)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*generate) return Generate(generate_source, generate_seed, generate_output);
    if (*run) return Run(run_source, run_mu, run_flags);
    if (*compare) return Compare(compare_source, compare_mu, compare_flags);
    if (*eval) return Eval(eval_game, eval_history, eval_triples);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigurationError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
