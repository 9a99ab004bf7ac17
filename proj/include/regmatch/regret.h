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

#ifndef REGMATCH_REGRET_H_
#define REGMATCH_REGRET_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "regmatch/game.h"

namespace regmatch {

// Raised when a derivation cannot produce a distribution because the
// normalisation constant mu is too small for the accumulated regrets.
class ConfigurationError : public std::runtime_error {
 public:
  ConfigurationError(int player, int row, double row_mass);

  int player() const { return player_; }
  int row() const { return row_; }
  // Sum over k != row of max(r_{row,k}, 0) / (mu t).
  double row_mass() const { return row_mass_; }

 private:
  int player_;
  int row_;
  double row_mass_;
};

// A probability distribution over one player's actions.
class PolicyVector {
 public:
  static constexpr double kSumTolerance = 1e-12;

  // Throws std::invalid_argument unless every entry is finite and >= 0 and the
  // entries sum to 1 within `tolerance`.
  static PolicyVector FromProbabilities(std::vector<double> probs,
                                        double tolerance = kSumTolerance);
  static PolicyVector Uniform(int num_actions);
  static PolicyVector PointMass(int num_actions, int action);

  int size() const { return static_cast<int>(probs_.size()); }
  double operator[](int k) const { return probs_[k]; }
  std::span<const double> probs() const { return probs_; }

 private:
  explicit PolicyVector(std::vector<double> probs) : probs_(std::move(probs)) {}
  std::vector<double> probs_;
};

// Cumulative regrets of one player: entry (j, k) is how much more the player
// would have earned had it played k in every past period in which it played j.
// The diagonal is identically zero.
class RegretMatrix {
 public:
  RegretMatrix(int player, int num_actions);

  int player() const { return player_; }
  int size() const { return num_actions_; }
  double at(int row, int col) const;
  std::span<const double> Row(int row) const;

  // Adds `increments` to row `row`. The diagonal increment must be exactly 0.
  void AddToRow(int row, std::span<const double> increments);

  friend bool operator==(const RegretMatrix&, const RegretMatrix&) = default;

 private:
  int player_;
  int num_actions_;
  std::vector<double> values_;
};

struct MuPolicy {
  enum class Mode { kAuto, kFixed };
  Mode mode = Mode::kAuto;
  double fixed_value = 1.0;
  double safety_factor = 1.0;
};

// kFixed returns fixed_value. kAuto returns
//   safety_factor * 2 * max_s |u^i(s)| * (|S^i| - 1),
// the bound under which the off-row mass of DeriveOriginal never exceeds 1,
// or the sentinel 1 when that product is zero.
double ComputeMu(const Game& game, int player, const MuPolicy& policy);

// r_{j,k} += u^i(k, s^-i) - u^i(s) for every k, with j = profile[player].
// Only row j changes.
void UpdateRow(RegretMatrix& regrets, const Game& game,
               std::span<const int> profile);

// Clipped rule: p(k) = max(r_{j,k}, 0) / (mu t) for k != j and p(j) takes the
// remaining mass. Residuals in [-1e-9, 0) are clamped to zero and the vector
// renormalised; anything lower throws ConfigurationError.
PolicyVector DeriveOriginal(const RegretMatrix& regrets, int row,
                            std::int64_t t, double mu);

// exp(x_k - max x) / sum_m exp(x_m - max x). Throws std::invalid_argument on
// an empty or non-finite input.
PolicyVector Softmax(std::span<const double> logits);

// Softmax rule over the unclipped scaled row x_k = r_{j,k} / (mu t), the
// diagonal coordinate (x_j = 0) included. Strictly positive.
PolicyVector DeriveSoftmax(const RegretMatrix& regrets, int row,
                           std::int64_t t, double mu);

// Inverse-CDF draw: the smallest k whose cumulative mass exceeds `u`.
int SampleAction(const PolicyVector& policy, double u);

// Rows of 17-significant-digit decimals separated by single spaces.
std::string FormatRegretMatrix(const RegretMatrix& regrets);

}  // namespace regmatch

#endif  // REGMATCH_REGRET_H_
