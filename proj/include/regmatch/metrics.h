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

#ifndef REGMATCH_METRICS_H_
#define REGMATCH_METRICS_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "regmatch/game.h"

namespace regmatch {

// Counts of the pure profiles played so far, keyed sparsely by flat profile
// index (same layout as Game).
class EmpiricalDistribution {
 public:
  explicit EmpiricalDistribution(std::vector<int> action_counts);

  void Record(std::span<const int> profile);

  const std::vector<int>& ActionCounts() const { return action_counts_; }
  std::int64_t total() const { return total_; }
  std::int64_t Count(std::span<const int> profile) const;
  // counts(profile) / total; 0 for an empty record.
  double Probability(std::span<const int> profile) const;
  // Iterates (flat index, count) in increasing index order.
  const std::map<std::size_t, std::int64_t>& counts() const { return counts_; }
  PureProfile ProfileAt(std::size_t index) const;

 private:
  std::size_t Index(std::span<const int> profile) const;

  std::vector<int> action_counts_;
  std::vector<std::size_t> strides_;
  std::map<std::size_t, std::int64_t> counts_;
  std::int64_t total_ = 0;
};

// One left-hand side of the correlated alpha-equilibrium condition:
//   sum_{s : s^i = j} psi(s) [u^i(k, s^-i) - u^i(s)].
struct TripleValue {
  int player;
  int action;     // recommended / played action j
  int deviation;  // k != j
  double value;

  friend bool operator==(const TripleValue&, const TripleValue&) = default;
};

struct AlphaReport {
  // Every (i, j, k != j) in lexicographic order.
  std::vector<TripleValue> per_triple;
  // Max over per_triple, raw (may be negative); 0 when no triple exists.
  double alpha = 0.0;
  // The first triple attaining alpha, if any.
  std::optional<TripleValue> argmax;
};

// Sparse evaluation over the profiles actually observed. Throws
// std::invalid_argument if `ed` is empty or its dimensions differ from the
// game's.
AlphaReport ComputeAlphaReport(const Game& game, const EmpiricalDistribution& ed);

// alpha <= tol.
bool IsCorrelatedEquilibrium(const Game& game, const EmpiricalDistribution& ed,
                             double tol);

}  // namespace regmatch

#endif  // REGMATCH_METRICS_H_
