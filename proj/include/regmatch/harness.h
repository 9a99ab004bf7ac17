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

#ifndef REGMATCH_HARNESS_H_
#define REGMATCH_HARNESS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "regmatch/game.h"
#include "regmatch/metrics.h"
#include "regmatch/regret.h"

namespace regmatch {

enum class Method { kOriginal, kSoftmax };

std::string_view MethodName(Method method);
// Accepts "original" and "softmax"; throws std::invalid_argument otherwise.
Method ParseMethod(std::string_view name);

struct ExperimentConfig {
  // Either a fixed game or a recipe for one. A generated game uses its own
  // spec seed, independent of `seed` below.
  std::variant<GameGenSpec, Game> game_source;
  Method method = Method::kOriginal;
  std::int64_t iterations = 1000;
  std::int64_t measure_every = 20;
  // Master seed of the play streams (one per player).
  std::uint64_t seed = 0;
  MuPolicy mu;
  // Per-player distributions for the first period; empty means uniform.
  std::vector<std::vector<double>> initial_policy;
  // Snapshot every player's regret matrix every this many steps (0 = off).
  std::int64_t regret_dump_every = 0;
  bool record_history = false;
  // Re-validate policies and regret diagonals after every step.
  bool check_invariants = false;
};

struct TraceRow {
  std::int64_t t;
  double alpha;
  std::optional<TripleValue> argmax;
};

struct RegretSnapshot {
  std::int64_t t;
  std::vector<RegretMatrix> regrets;
};

struct ExperimentTrace {
  Method method;
  std::uint64_t seed;
  std::int64_t iterations;
  std::int64_t measure_every;
  MuPolicy mu_policy;
  Game game;
  std::vector<double> resolved_mu;
  // One row at each t in {measure_every, 2 measure_every, ...} <= iterations.
  std::vector<TraceRow> rows;
  EmpiricalDistribution final_distribution;
  std::vector<RegretMatrix> final_regrets;
  std::vector<RegretSnapshot> regret_dumps;
  // Filled only when record_history is set.
  std::vector<PureProfile> history;
  double elapsed_seconds = 0.0;
};

Game ResolveGame(const ExperimentConfig& config);

// Runs the adaptive procedure for config.iterations periods. Period 1 draws
// from the initial policy; after each period every player updates the row of
// its played action and derives its next policy with the configured method.
// Deterministic in the config apart from elapsed_seconds.
//
// Throws std::invalid_argument for an invalid config and ConfigurationError
// when a fixed mu is too small for the original method.
ExperimentTrace RunSimulation(const ExperimentConfig& config);

// Trapezoidal area under max(alpha, 0) over the measurement grid.
double ClampedAuc(std::span<const TraceRow> rows);

struct SeedComparison {
  std::uint64_t seed;
  ExperimentTrace first;
  ExperimentTrace second;
  double auc_first;
  double auc_second;
  // auc_second / auc_first, 1 when they are equal.
  double auc_ratio;
};

struct ComparisonSummary {
  Method first;
  Method second;
  std::vector<SeedComparison> per_seed;
  // Fraction of seeds with auc_second < auc_first.
  double second_wins_fraction;
};

// Runs both methods once per seed. Each seed is used as the play seed and,
// when the base config generates its game, also as the game seed, so every
// seed gets its own game shared by both methods. Runs execute on up to
// `max_threads` workers (0 = hardware concurrency); results do not depend on
// the thread count.
ComparisonSummary CompareMethods(const ExperimentConfig& base,
                                 std::span<const std::uint64_t> seeds,
                                 Method first = Method::kOriginal,
                                 Method second = Method::kSoftmax,
                                 unsigned max_threads = 0);

}  // namespace regmatch

#endif  // REGMATCH_HARNESS_H_
