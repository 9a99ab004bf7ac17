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

#include "regmatch/harness.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>
#include <thread>
#include <utility>

#include "regmatch/random.h"

namespace regmatch {
namespace {

void ValidateConfig(const ExperimentConfig& config, const Game& game) {
  if (config.iterations < 1) {
    throw std::invalid_argument("iterations must be >= 1");
  }
  if (config.measure_every < 1 || config.measure_every > config.iterations) {
    throw std::invalid_argument("measure_every must lie in [1, iterations]");
  }
  if (config.regret_dump_every < 0) {
    throw std::invalid_argument("regret_dump_every must be >= 0");
  }
  if (!config.initial_policy.empty() &&
      config.initial_policy.size() != static_cast<std::size_t>(game.NumPlayers())) {
    throw std::invalid_argument("initial policy needs one distribution per player");
  }
}

std::vector<PolicyVector> InitialPolicies(const ExperimentConfig& config,
                                          const Game& game) {
  std::vector<PolicyVector> policies;
  for (int i = 0; i < game.NumPlayers(); ++i) {
    if (config.initial_policy.empty()) {
      policies.push_back(PolicyVector::Uniform(game.NumActions(i)));
      continue;
    }
    const auto& probs = config.initial_policy[i];
    if (probs.size() != static_cast<std::size_t>(game.NumActions(i))) {
      throw std::invalid_argument("initial policy of player " + std::to_string(i) +
                                  " has the wrong length");
    }
    policies.push_back(PolicyVector::FromProbabilities(probs));
  }
  return policies;
}

void CheckStepInvariants(const RegretMatrix& regrets, const PolicyVector& policy,
                         int row, Method method) {
  for (int j = 0; j < regrets.size(); ++j) {
    if (regrets.at(j, j) != 0.0) {
      throw std::logic_error("regret diagonal drifted from zero");
    }
  }
  double sum = 0.0;
  for (int k = 0; k < policy.size(); ++k) {
    if (!(policy[k] >= 0.0)) throw std::logic_error("negative probability");
    if (method == Method::kSoftmax && !(policy[k] > 0.0)) {
      throw std::logic_error("softmax policy lost support");
    }
    if (method == Method::kOriginal && k != row && regrets.at(row, k) <= 0.0 &&
        policy[k] != 0.0) {
      throw std::logic_error("original policy supports a nonpositive regret");
    }
    sum += policy[k];
  }
  if (std::abs(sum - 1.0) > PolicyVector::kSumTolerance) {
    throw std::logic_error("policy does not sum to one");
  }
}

}  // namespace

std::string_view MethodName(Method method) {
  switch (method) {
    case Method::kOriginal:
      return "original";
    case Method::kSoftmax:
      return "softmax";
  }
  return "unknown";
}

Method ParseMethod(std::string_view name) {
  if (name == "original") return Method::kOriginal;
  if (name == "softmax") return Method::kSoftmax;
  throw std::invalid_argument("unknown method '" + std::string(name) +
                              "' (expected original or softmax)");
}

Game ResolveGame(const ExperimentConfig& config) {
  if (const auto* game = std::get_if<Game>(&config.game_source)) return *game;
  return GenerateRandomGame(std::get<GameGenSpec>(config.game_source));
}

ExperimentTrace RunSimulation(const ExperimentConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  Game game = ResolveGame(config);
  ValidateConfig(config, game);
  const int n = game.NumPlayers();

  std::vector<double> mu(n);
  std::vector<RegretMatrix> regrets;
  std::vector<RandomStream> streams;
  for (int i = 0; i < n; ++i) {
    mu[i] = ComputeMu(game, i, config.mu);
    regrets.emplace_back(i, game.NumActions(i));
    streams.emplace_back(config.seed, PlayerStream(i));
  }
  std::vector<PolicyVector> policies = InitialPolicies(config, game);

  EmpiricalDistribution record(game.ActionCounts());
  std::vector<TraceRow> rows;
  rows.reserve(static_cast<std::size_t>(config.iterations / config.measure_every));
  std::vector<RegretSnapshot> dumps;
  std::vector<PureProfile> history;
  if (config.record_history) history.reserve(static_cast<std::size_t>(config.iterations));

  PureProfile profile(n);
  for (std::int64_t t = 1; t <= config.iterations; ++t) {
    for (int i = 0; i < n; ++i) {
      profile[i] = SampleAction(policies[i], streams[i].NextUniform());
    }
    record.Record(profile);
    if (config.record_history) history.push_back(profile);

    for (int i = 0; i < n; ++i) {
      UpdateRow(regrets[i], game, profile);
      policies[i] = config.method == Method::kOriginal
                        ? DeriveOriginal(regrets[i], profile[i], t, mu[i])
                        : DeriveSoftmax(regrets[i], profile[i], t, mu[i]);
      if (config.check_invariants) {
        CheckStepInvariants(regrets[i], policies[i], profile[i], config.method);
      }
    }

    if (t % config.measure_every == 0) {
      AlphaReport report = ComputeAlphaReport(game, record);
      rows.push_back(TraceRow{t, report.alpha, report.argmax});
    }
    if (config.regret_dump_every > 0 && t % config.regret_dump_every == 0) {
      dumps.push_back(RegretSnapshot{t, regrets});
    }
  }

  ExperimentTrace trace{
      .method = config.method,
      .seed = config.seed,
      .iterations = config.iterations,
      .measure_every = config.measure_every,
      .mu_policy = config.mu,
      .game = std::move(game),
      .resolved_mu = std::move(mu),
      .rows = std::move(rows),
      .final_distribution = std::move(record),
      .final_regrets = std::move(regrets),
      .regret_dumps = std::move(dumps),
      .history = std::move(history),
  };
  trace.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return trace;
}

double ClampedAuc(std::span<const TraceRow> rows) {
  double area = 0.0;
  for (std::size_t m = 1; m < rows.size(); ++m) {
    const double width = static_cast<double>(rows[m].t - rows[m - 1].t);
    area += width * 0.5 *
            (std::max(rows[m - 1].alpha, 0.0) + std::max(rows[m].alpha, 0.0));
  }
  return area;
}

ComparisonSummary CompareMethods(const ExperimentConfig& base,
                                 std::span<const std::uint64_t> seeds,
                                 Method first, Method second,
                                 unsigned max_threads) {
  if (seeds.empty()) throw std::invalid_argument("compare: at least one seed");

  // Task 2s runs `first` on seeds[s], task 2s + 1 runs `second`.
  const std::size_t num_tasks = 2 * seeds.size();
  std::vector<std::optional<ExperimentTrace>> traces(num_tasks);
  std::vector<std::exception_ptr> errors(num_tasks);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t task = next++; task < num_tasks; task = next++) {
      ExperimentConfig config = base;
      const std::uint64_t seed = seeds[task / 2];
      config.seed = seed;
      config.method = task % 2 == 0 ? first : second;
      if (auto* spec = std::get_if<GameGenSpec>(&config.game_source)) {
        spec->seed = seed;
      }
      try {
        traces[task] = RunSimulation(config);
      } catch (...) {
        errors[task] = std::current_exception();
      }
    }
  };
  unsigned threads = max_threads ? max_threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(num_tasks));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < threads; ++w) pool.emplace_back(worker);
    worker();
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }

  ComparisonSummary summary{first, second, {}, 0.0};
  std::size_t wins = 0;
  for (std::size_t s = 0; s < seeds.size(); ++s) {
    ExperimentTrace& a = *traces[2 * s];
    ExperimentTrace& b = *traces[2 * s + 1];
    const double auc_a = ClampedAuc(a.rows);
    const double auc_b = ClampedAuc(b.rows);
    double ratio = 1.0;
    if (auc_a != auc_b) {
      ratio = auc_a == 0.0 ? std::numeric_limits<double>::infinity() : auc_b / auc_a;
    }
    if (auc_b < auc_a) ++wins;
    summary.per_seed.push_back(
        SeedComparison{seeds[s], std::move(a), std::move(b), auc_a, auc_b, ratio});
  }
  summary.second_wins_fraction =
      static_cast<double>(wins) / static_cast<double>(seeds.size());
  return summary;
}

}  // namespace regmatch
