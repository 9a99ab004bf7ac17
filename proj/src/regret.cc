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

#include "regmatch/regret.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

#include "regmatch/game_io.h"

namespace regmatch {
namespace {

// Residual below which DeriveOriginal refuses to clamp.
constexpr double kResidualFloor = -1e-9;

void CheckDerivationArgs(const RegretMatrix& regrets, int row, std::int64_t t,
                         double mu) {
  if (row < 0 || row >= regrets.size()) {
    throw std::invalid_argument("derive: row " + std::to_string(row) +
                                " out of range");
  }
  if (t < 1) throw std::invalid_argument("derive: t must be >= 1");
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw std::invalid_argument("derive: mu must be positive and finite");
  }
}

}  // namespace

ConfigurationError::ConfigurationError(int player, int row, double row_mass)
    : std::runtime_error(
          "mu too small for player " + std::to_string(player) + ": row " +
          std::to_string(row) + " carries off-diagonal mass " +
          FormatReal(row_mass) + " > 1; raise mu or use auto mode"),
      player_(player),
      row_(row),
      row_mass_(row_mass) {}

PolicyVector PolicyVector::FromProbabilities(std::vector<double> probs,
                                             double tolerance) {
  if (probs.empty()) throw std::invalid_argument("policy: no actions");
  double sum = 0.0;
  for (double p : probs) {
    if (!std::isfinite(p) || p < 0.0) {
      throw std::invalid_argument("policy: entries must be finite and >= 0");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > tolerance) {
    throw std::invalid_argument("policy: entries sum to " + FormatReal(sum) +
                                ", not 1");
  }
  return PolicyVector(std::move(probs));
}

PolicyVector PolicyVector::Uniform(int num_actions) {
  if (num_actions < 1) throw std::invalid_argument("policy: no actions");
  return PolicyVector(std::vector<double>(num_actions, 1.0 / num_actions));
}

PolicyVector PolicyVector::PointMass(int num_actions, int action) {
  if (num_actions < 1 || action < 0 || action >= num_actions) {
    throw std::invalid_argument("policy: point mass out of range");
  }
  std::vector<double> probs(num_actions, 0.0);
  probs[action] = 1.0;
  return PolicyVector(std::move(probs));
}

RegretMatrix::RegretMatrix(int player, int num_actions)
    : player_(player), num_actions_(num_actions) {
  if (num_actions < 1) {
    throw std::invalid_argument("RegretMatrix: num_actions must be >= 1");
  }
  values_.assign(static_cast<std::size_t>(num_actions) * num_actions, 0.0);
}

double RegretMatrix::at(int row, int col) const {
  if (row < 0 || row >= num_actions_ || col < 0 || col >= num_actions_) {
    throw std::invalid_argument("RegretMatrix: index out of range");
  }
  return values_[static_cast<std::size_t>(row) * num_actions_ + col];
}

std::span<const double> RegretMatrix::Row(int row) const {
  if (row < 0 || row >= num_actions_) {
    throw std::invalid_argument("RegretMatrix: row out of range");
  }
  return std::span<const double>(values_).subspan(
      static_cast<std::size_t>(row) * num_actions_, num_actions_);
}

void RegretMatrix::AddToRow(int row, std::span<const double> increments) {
  if (row < 0 || row >= num_actions_ ||
      increments.size() != static_cast<std::size_t>(num_actions_)) {
    throw std::invalid_argument("RegretMatrix: row update has the wrong shape");
  }
  if (increments[row] != 0.0) {
    throw std::invalid_argument("RegretMatrix: diagonal increment must be 0");
  }
  double* values = values_.data() + static_cast<std::size_t>(row) * num_actions_;
  for (int k = 0; k < num_actions_; ++k) values[k] += increments[k];
}

double ComputeMu(const Game& game, int player, const MuPolicy& policy) {
  game.CheckPlayer(player);
  if (policy.mode == MuPolicy::Mode::kFixed) {
    if (!(policy.fixed_value > 0.0) || !std::isfinite(policy.fixed_value)) {
      throw std::invalid_argument("fixed mu must be positive and finite");
    }
    return policy.fixed_value;
  }
  if (!(policy.safety_factor >= 1.0) || !std::isfinite(policy.safety_factor)) {
    throw std::invalid_argument("mu safety factor must be >= 1");
  }
  const double max_abs = game.MaxAbsPayoff(player);
  const int actions = game.NumActions(player);
  if (max_abs == 0.0 || actions == 1) return 1.0;
  return policy.safety_factor * 2.0 * max_abs * static_cast<double>(actions - 1);
}

void UpdateRow(RegretMatrix& regrets, const Game& game,
               std::span<const int> profile) {
  const int player = regrets.player();
  game.CheckPlayer(player);
  game.CheckProfile(profile);
  if (regrets.size() != game.NumActions(player)) {
    throw std::invalid_argument("UpdateRow: regret matrix of player " +
                                std::to_string(player) +
                                " does not match the game");
  }
  const int row = profile[player];
  const double realised = game.Payoff(player, profile);
  std::vector<double> increments(regrets.size());
  for (int k = 0; k < regrets.size(); ++k) {
    increments[k] =
        k == row ? 0.0 : game.DeviationPayoff(player, profile, k) - realised;
  }
  regrets.AddToRow(row, increments);
}

PolicyVector DeriveOriginal(const RegretMatrix& regrets, int row,
                            std::int64_t t, double mu) {
  CheckDerivationArgs(regrets, row, t, mu);
  const auto r = regrets.Row(row);
  const double scale = mu * static_cast<double>(t);
  std::vector<double> probs(r.size(), 0.0);
  double off_row = 0.0;
  for (int k = 0; k < regrets.size(); ++k) {
    if (k == row) continue;
    probs[k] = std::max(r[k], 0.0) / scale;
    off_row += probs[k];
  }
  double residual = 1.0 - off_row;
  if (residual < kResidualFloor) {
    throw ConfigurationError(regrets.player(), row, off_row);
  }
  if (residual < 0.0) {
    for (double& p : probs) p /= off_row;
    residual = 0.0;
  }
  probs[row] = residual;
  return PolicyVector::FromProbabilities(std::move(probs));
}

PolicyVector Softmax(std::span<const double> logits) {
  if (logits.empty()) throw std::invalid_argument("softmax: no logits");
  double top = logits[0];
  for (double v : logits) {
    if (!std::isfinite(v)) throw std::invalid_argument("softmax: non-finite logit");
    top = std::max(top, v);
  }
  std::vector<double> probs(logits.size());
  double total = 0.0;
  for (std::size_t k = 0; k < logits.size(); ++k) {
    probs[k] = std::exp(logits[k] - top);
    total += probs[k];
  }
  for (double& p : probs) p /= total;
  return PolicyVector::FromProbabilities(std::move(probs));
}

PolicyVector DeriveSoftmax(const RegretMatrix& regrets, int row,
                           std::int64_t t, double mu) {
  CheckDerivationArgs(regrets, row, t, mu);
  const auto r = regrets.Row(row);
  const double scale = mu * static_cast<double>(t);
  std::vector<double> logits(r.size());
  for (std::size_t k = 0; k < r.size(); ++k) logits[k] = r[k] / scale;
  return Softmax(logits);
}

int SampleAction(const PolicyVector& policy, double u) {
  if (!(u >= 0.0 && u < 1.0)) {
    throw std::invalid_argument("SampleAction: u must lie in [0, 1)");
  }
  double cumulative = 0.0;
  int last_supported = 0;
  for (int k = 0; k < policy.size(); ++k) {
    cumulative += policy[k];
    if (policy[k] > 0.0) last_supported = k;
    if (cumulative > u) return k;
  }
  // Cumulative rounding left the total just below u.
  return last_supported;
}

std::string FormatRegretMatrix(const RegretMatrix& regrets) {
  std::ostringstream out;
  for (int j = 0; j < regrets.size(); ++j) {
    const auto row = regrets.Row(j);
    for (std::size_t k = 0; k < row.size(); ++k) {
      out << (k ? " " : "") << FormatReal(row[k]);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace regmatch
