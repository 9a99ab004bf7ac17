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

#include "regmatch/game.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "regmatch/random.h"

namespace regmatch {

Game::Game(std::vector<int> action_counts,
           std::vector<std::vector<double>> payoffs)
    : action_counts_(std::move(action_counts)), payoffs_(std::move(payoffs)) {
  if (action_counts_.empty()) {
    throw std::invalid_argument("Game: at least one player is required");
  }
  num_profiles_ = 1;
  for (int count : action_counts_) {
    if (count < 1) {
      throw std::invalid_argument("Game: every action count must be >= 1");
    }
    if (num_profiles_ >
        std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(count)) {
      throw std::invalid_argument("Game: profile space overflows");
    }
    num_profiles_ *= static_cast<std::size_t>(count);
  }
  strides_.assign(action_counts_.size(), 1);
  for (int i = NumPlayers() - 2; i >= 0; --i) {
    strides_[i] = strides_[i + 1] * static_cast<std::size_t>(action_counts_[i + 1]);
  }
  if (payoffs_.size() != action_counts_.size()) {
    throw std::invalid_argument("Game: expected " +
                                std::to_string(action_counts_.size()) +
                                " payoff tensors, got " +
                                std::to_string(payoffs_.size()));
  }
  for (std::size_t i = 0; i < payoffs_.size(); ++i) {
    if (payoffs_[i].size() != num_profiles_) {
      throw std::invalid_argument(
          "Game: payoff tensor of player " + std::to_string(i) + " has " +
          std::to_string(payoffs_[i].size()) + " entries, expected " +
          std::to_string(num_profiles_));
    }
    for (double v : payoffs_[i]) {
      if (!std::isfinite(v)) {
        throw std::invalid_argument("Game: payoffs must be finite");
      }
    }
  }
}

void Game::CheckPlayer(int player) const {
  if (player < 0 || player >= NumPlayers()) {
    throw std::invalid_argument("player index " + std::to_string(player) +
                                " out of range for a " +
                                std::to_string(NumPlayers()) + "-player game");
  }
}

void Game::CheckProfile(std::span<const int> profile) const {
  if (profile.size() != action_counts_.size()) {
    throw std::invalid_argument("profile has " + std::to_string(profile.size()) +
                                " entries, game has " +
                                std::to_string(action_counts_.size()) +
                                " players");
  }
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i] < 0 || profile[i] >= action_counts_[i]) {
      throw std::invalid_argument("action " + std::to_string(profile[i]) +
                                  " out of range for player " +
                                  std::to_string(i));
    }
  }
}

int Game::NumActions(int player) const {
  CheckPlayer(player);
  return action_counts_[player];
}

std::span<const double> Game::PayoffTensor(int player) const {
  CheckPlayer(player);
  return payoffs_[player];
}

std::size_t Game::Stride(int player) const {
  CheckPlayer(player);
  return strides_[player];
}

std::size_t Game::ProfileIndex(std::span<const int> profile) const {
  CheckProfile(profile);
  std::size_t index = 0;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    index += strides_[i] * static_cast<std::size_t>(profile[i]);
  }
  return index;
}

PureProfile Game::ProfileAt(std::size_t index) const {
  if (index >= num_profiles_) {
    throw std::invalid_argument("profile index out of range");
  }
  PureProfile profile(action_counts_.size());
  for (std::size_t i = 0; i < profile.size(); ++i) {
    profile[i] = static_cast<int>(index / strides_[i]);
    index %= strides_[i];
  }
  return profile;
}

double Game::Payoff(int player, std::span<const int> profile) const {
  CheckPlayer(player);
  return payoffs_[player][ProfileIndex(profile)];
}

double Game::DeviationPayoff(int player, std::span<const int> profile,
                             int action) const {
  CheckPlayer(player);
  if (action < 0 || action >= action_counts_[player]) {
    throw std::invalid_argument("deviation action " + std::to_string(action) +
                                " out of range for player " +
                                std::to_string(player));
  }
  const std::size_t base = ProfileIndex(profile);
  const std::size_t stride = strides_[player];
  const std::size_t index =
      base - stride * static_cast<std::size_t>(profile[player]) +
      stride * static_cast<std::size_t>(action);
  return payoffs_[player][index];
}

double Game::MaxAbsPayoff(int player) const {
  CheckPlayer(player);
  double best = 0.0;
  for (double v : payoffs_[player]) best = std::max(best, std::abs(v));
  return best;
}

Game GenerateRandomGame(const GameGenSpec& spec) {
  if (!(spec.payoff_low < spec.payoff_high)) {
    throw std::invalid_argument("GenerateRandomGame: payoff_low must be < payoff_high");
  }
  if (spec.action_counts.empty()) {
    throw std::invalid_argument("GenerateRandomGame: no players");
  }
  for (int count : spec.action_counts) {
    if (count < 1) {
      throw std::invalid_argument("GenerateRandomGame: action counts must be >= 1");
    }
  }
  if (spec.integer_payoffs &&
      (std::trunc(spec.payoff_low) != spec.payoff_low ||
       std::trunc(spec.payoff_high) != spec.payoff_high)) {
    throw std::invalid_argument(
        "GenerateRandomGame: integer payoffs need integral bounds");
  }
  if (spec.integer_payoffs &&
      (std::abs(spec.payoff_low) > 0x1.0p53 ||
       std::abs(spec.payoff_high) > 0x1.0p53)) {
    throw std::invalid_argument(
        "GenerateRandomGame: integer bounds must lie within +/-2^53");
  }
  std::size_t num_profiles = 1;
  for (int count : spec.action_counts) {
    num_profiles *= static_cast<std::size_t>(count);
  }
  RandomStream stream(spec.seed, kGameStream);
  const auto low = static_cast<std::int64_t>(spec.payoff_low);
  const auto high = static_cast<std::int64_t>(spec.payoff_high);
  std::vector<std::vector<double>> payoffs(spec.action_counts.size());
  for (auto& tensor : payoffs) {
    tensor.resize(num_profiles);
    for (double& v : tensor) {
      v = spec.integer_payoffs
              ? static_cast<double>(stream.NextInteger(low, high))
              : stream.NextUniform(spec.payoff_low, spec.payoff_high);
    }
  }
  return Game(spec.action_counts, std::move(payoffs));
}

double PureNashGain(const Game& game, std::span<const int> profile) {
  game.CheckProfile(profile);
  double gain = 0.0;
  bool any = false;
  for (int i = 0; i < game.NumPlayers(); ++i) {
    const double current = game.Payoff(i, profile);
    for (int k = 0; k < game.NumActions(i); ++k) {
      if (k == profile[i]) continue;
      const double delta = game.DeviationPayoff(i, profile, k) - current;
      gain = any ? std::max(gain, delta) : delta;
      any = true;
    }
  }
  return gain;
}

}  // namespace regmatch
