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

#ifndef REGMATCH_GAME_H_
#define REGMATCH_GAME_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace regmatch {

// One action index per player. Entry i must be < the action count of player i.
using PureProfile = std::vector<int>;

// A finite N-player normal-form game with dense payoff tensors.
//
// Every player's tensor is stored flat in row-major profile order: player 0's
// action varies slowest, the last player's fastest. A Game is immutable once
// constructed and may be shared freely across threads.
class Game {
 public:
  // Throws std::invalid_argument unless every action count is >= 1, there is
  // one tensor per player, every tensor has prod(action_counts) entries and
  // every entry is finite.
  Game(std::vector<int> action_counts,
       std::vector<std::vector<double>> payoffs);

  int NumPlayers() const { return static_cast<int>(action_counts_.size()); }
  int NumActions(int player) const;
  const std::vector<int>& ActionCounts() const { return action_counts_; }
  std::size_t NumProfiles() const { return num_profiles_; }
  std::span<const double> PayoffTensor(int player) const;

  // u^player(profile).
  double Payoff(int player, std::span<const int> profile) const;

  // u^player of `profile` with the player's own action replaced by `action`.
  double DeviationPayoff(int player, std::span<const int> profile,
                         int action) const;

  // Flat tensor offset of a profile, and its inverse.
  std::size_t ProfileIndex(std::span<const int> profile) const;
  PureProfile ProfileAt(std::size_t index) const;

  // Offset between profiles that differ by one in `player`'s action.
  std::size_t Stride(int player) const;

  // max_s |u^player(s)|.
  double MaxAbsPayoff(int player) const;

  // Throws std::invalid_argument if the profile has the wrong length or an
  // out-of-range action.
  void CheckProfile(std::span<const int> profile) const;
  void CheckPlayer(int player) const;

  friend bool operator==(const Game&, const Game&) = default;

 private:
  std::vector<int> action_counts_;
  std::vector<std::size_t> strides_;
  std::vector<std::vector<double>> payoffs_;
  std::size_t num_profiles_ = 0;
};

struct GameGenSpec {
  std::vector<int> action_counts;
  double payoff_low = -1000.0;
  double payoff_high = 1000.0;
  std::uint64_t seed = 0;
  // Draw integers uniformly from [low, high] instead of reals from [low, high).
  // Both bounds must then be integral.
  bool integer_payoffs = false;
};

// Fills every payoff independently and uniformly from the game stream of
// `spec.seed`, player 0's tensor first, each in flat profile order. A pure
// function of the spec.
Game GenerateRandomGame(const GameGenSpec& spec);

// Largest gain any single player can obtain by deviating unilaterally from
// `profile`: max over (i, k) of u^i(k, s^-i) - u^i(s). A profile is a pure Nash
// equilibrium iff this is <= 0. Players with a single action contribute
// nothing and the maximum over an empty set is 0.
double PureNashGain(const Game& game, std::span<const int> profile);

}  // namespace regmatch

#endif  // REGMATCH_GAME_H_
