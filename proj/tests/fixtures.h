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

// Shared fixtures and brute-force oracles for the test binaries. The oracles
// deliberately avoid the library's sparse and stride-based code paths: they
// enumerate profiles with their own odometer and index tensors with their own
// row-major arithmetic.

#ifndef REGMATCH_TESTS_FIXTURES_H_
#define REGMATCH_TESTS_FIXTURES_H_

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "regmatch/game.h"

namespace regmatch::testing {

inline constexpr int kHeads = 0;
inline constexpr int kTails = 1;

// u^1 = +1 when the coins match, -1 otherwise; u^2 = -u^1.
inline Game MatchingPennies() {
  return Game({2, 2}, {{1, -1, -1, 1}, {-1, 1, 1, -1}});
}

inline Game ConstantGame(std::vector<int> counts, double value) {
  std::size_t profiles = 1;
  for (int c : counts) profiles *= static_cast<std::size_t>(c);
  std::vector<std::vector<double>> payoffs(counts.size(),
                                           std::vector<double>(profiles, value));
  return Game(std::move(counts), std::move(payoffs));
}

// Random dimensions: 1..max_players players with 1..max_actions actions.
inline std::vector<int> RandomCounts(std::mt19937_64& rng, int max_players,
                                     int max_actions) {
  std::uniform_int_distribution<int> players(1, max_players);
  std::uniform_int_distribution<int> actions(1, max_actions);
  std::vector<int> counts(players(rng));
  for (int& c : counts) c = actions(rng);
  return counts;
}

inline Game RandomGame(std::mt19937_64& rng, std::vector<int> counts,
                       double low = -1000, double high = 1000) {
  std::size_t profiles = 1;
  for (int c : counts) profiles *= static_cast<std::size_t>(c);
  std::uniform_real_distribution<double> payoff(low, high);
  std::vector<std::vector<double>> payoffs(counts.size());
  for (auto& tensor : payoffs) {
    tensor.resize(profiles);
    for (double& v : tensor) v = payoff(rng);
  }
  return Game(std::move(counts), std::move(payoffs));
}

inline PureProfile RandomProfile(std::mt19937_64& rng, const std::vector<int>& counts) {
  PureProfile profile(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    profile[i] = std::uniform_int_distribution<int>(0, counts[i] - 1)(rng);
  }
  return profile;
}

// Row-major offset computed from scratch (player 0 slowest).
inline std::size_t OracleOffset(const std::vector<int>& counts, const PureProfile& s) {
  std::size_t offset = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    offset = offset * static_cast<std::size_t>(counts[i]) + static_cast<std::size_t>(s[i]);
  }
  return offset;
}

inline double OraclePayoff(const Game& game, int player, const PureProfile& s) {
  return game.PayoffTensor(player)[OracleOffset(game.ActionCounts(), s)];
}

inline double OracleDeviation(const Game& game, int player, PureProfile s, int k) {
  s[player] = k;
  return OraclePayoff(game, player, s);
}

// Every profile of S by odometer, last player fastest.
inline std::vector<PureProfile> AllProfiles(const std::vector<int>& counts) {
  std::vector<PureProfile> out;
  PureProfile s(counts.size(), 0);
  while (true) {
    out.push_back(s);
    int i = static_cast<int>(counts.size()) - 1;
    while (i >= 0 && ++s[i] == counts[i]) s[i--] = 0;
    if (i < 0) return out;
  }
}

struct DenseAlpha {
  // value[i][j][k]
  std::vector<std::vector<std::vector<double>>> value;
  double alpha = 0.0;
};

// Dense evaluation of sum_{s: s^i=j} psi(s)[u^i(k, s^-i) - u^i(s)]: loops over
// all of S and all triples, zero-probability profiles included.
inline DenseAlpha DenseAlphaOracle(const Game& game,
                                   const std::vector<PureProfile>& history) {
  const auto& counts = game.ActionCounts();
  std::map<PureProfile, double> freq;
  for (const auto& s : history) freq[s] += 1.0;
  const double total = static_cast<double>(history.size());
  DenseAlpha result;
  result.value.resize(counts.size());
  bool any = false;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    result.value[i].assign(counts[i], std::vector<double>(counts[i], 0.0));
    for (int j = 0; j < counts[i]; ++j) {
      for (int k = 0; k < counts[i]; ++k) {
        if (k == j) continue;
        double sum = 0.0;
        for (const auto& s : AllProfiles(counts)) {
          if (s[i] != j) continue;
          const auto it = freq.find(s);
          const double psi = it == freq.end() ? 0.0 : it->second / total;
          sum += psi * (OracleDeviation(game, static_cast<int>(i), s, k) -
                        OraclePayoff(game, static_cast<int>(i), s));
        }
        result.value[i][j][k] = sum;
        result.alpha = any ? std::max(result.alpha, sum) : sum;
        any = true;
      }
    }
  }
  return result;
}

// Regret matrix of `player` recomputed from the whole play history:
// R[j][k] = sum_{t : s_t^i = j} u^i(k, s_t^-i) - u^i(s_t).
inline std::vector<std::vector<double>> HistoryRegretOracle(
    const Game& game, int player, const std::vector<PureProfile>& history) {
  const int m = game.ActionCounts()[player];
  std::vector<std::vector<double>> r(m, std::vector<double>(m, 0.0));
  for (const auto& s : history) {
    const int j = s[player];
    for (int k = 0; k < m; ++k) {
      r[j][k] += OracleDeviation(game, player, s, k) - OraclePayoff(game, player, s);
    }
  }
  return r;
}

}  // namespace regmatch::testing

#endif  // REGMATCH_TESTS_FIXTURES_H_
