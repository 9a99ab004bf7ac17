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

#include "regmatch/metrics.h"

#include <stdexcept>
#include <string>
#include <utility>

namespace regmatch {

EmpiricalDistribution::EmpiricalDistribution(std::vector<int> action_counts)
    : action_counts_(std::move(action_counts)) {
  if (action_counts_.empty()) {
    throw std::invalid_argument("EmpiricalDistribution: no players");
  }
  strides_.assign(action_counts_.size(), 1);
  for (int count : action_counts_) {
    if (count < 1) {
      throw std::invalid_argument("EmpiricalDistribution: action counts must be >= 1");
    }
  }
  for (int i = static_cast<int>(action_counts_.size()) - 2; i >= 0; --i) {
    strides_[i] = strides_[i + 1] * static_cast<std::size_t>(action_counts_[i + 1]);
  }
}

std::size_t EmpiricalDistribution::Index(std::span<const int> profile) const {
  if (profile.size() != action_counts_.size()) {
    throw std::invalid_argument("EmpiricalDistribution: profile length " +
                                std::to_string(profile.size()) + " != " +
                                std::to_string(action_counts_.size()));
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i] < 0 || profile[i] >= action_counts_[i]) {
      throw std::invalid_argument("EmpiricalDistribution: action " +
                                  std::to_string(profile[i]) +
                                  " out of range for player " + std::to_string(i));
    }
    index += strides_[i] * static_cast<std::size_t>(profile[i]);
  }
  return index;
}

void EmpiricalDistribution::Record(std::span<const int> profile) {
  ++counts_[Index(profile)];
  ++total_;
}

std::int64_t EmpiricalDistribution::Count(std::span<const int> profile) const {
  const auto it = counts_.find(Index(profile));
  return it == counts_.end() ? 0 : it->second;
}

double EmpiricalDistribution::Probability(std::span<const int> profile) const {
  if (total_ == 0) return 0.0;
  return static_cast<double>(Count(profile)) / static_cast<double>(total_);
}

PureProfile EmpiricalDistribution::ProfileAt(std::size_t index) const {
  PureProfile profile(action_counts_.size());
  for (std::size_t i = 0; i < profile.size(); ++i) {
    profile[i] = static_cast<int>(index / strides_[i]);
    index %= strides_[i];
  }
  return profile;
}

AlphaReport ComputeAlphaReport(const Game& game, const EmpiricalDistribution& ed) {
  if (ed.ActionCounts() != game.ActionCounts()) {
    throw std::invalid_argument(
        "alpha: empirical distribution dimensions do not match the game");
  }
  if (ed.total() < 1) {
    throw std::invalid_argument("alpha: empty empirical distribution");
  }
  const int n = game.NumPlayers();
  // gains[i][j * |S^i| + k] accumulates the (i, j, k) sum.
  std::vector<std::vector<double>> gains(n);
  for (int i = 0; i < n; ++i) {
    const auto m = static_cast<std::size_t>(game.NumActions(i));
    gains[i].assign(m * m, 0.0);
  }
  const double total = static_cast<double>(ed.total());
  for (const auto& [index, count] : ed.counts()) {
    const PureProfile profile = ed.ProfileAt(index);
    const double psi = static_cast<double>(count) / total;
    for (int i = 0; i < n; ++i) {
      const int m = game.NumActions(i);
      const int j = profile[i];
      const double realised = game.Payoff(i, profile);
      for (int k = 0; k < m; ++k) {
        if (k == j) continue;
        gains[i][static_cast<std::size_t>(j) * m + k] +=
            psi * (game.DeviationPayoff(i, profile, k) - realised);
      }
    }
  }
  AlphaReport report;
  for (int i = 0; i < n; ++i) {
    const int m = game.NumActions(i);
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        if (k == j) continue;
        TripleValue triple{i, j, k, gains[i][static_cast<std::size_t>(j) * m + k]};
        if (!report.argmax || triple.value > report.argmax->value) {
          report.argmax = triple;
        }
        report.per_triple.push_back(triple);
      }
    }
  }
  report.alpha = report.argmax ? report.argmax->value : 0.0;
  return report;
}

bool IsCorrelatedEquilibrium(const Game& game, const EmpiricalDistribution& ed,
                             double tol) {
  return ComputeAlphaReport(game, ed).alpha <= tol;
}

}  // namespace regmatch
