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

#ifndef REGMATCH_RANDOM_H_
#define REGMATCH_RANDOM_H_

#include <cstdint>
#include <random>

namespace regmatch {

// Stream ids carved out of one master seed. Game generation owns stream 0 and
// player i draws its actions from stream 1 + i, so adding a player never
// perturbs the draws of the existing ones.
inline constexpr std::uint64_t kGameStream = 0;
inline constexpr std::uint64_t PlayerStream(int player) {
  return 1 + static_cast<std::uint64_t>(player);
}

// A deterministic pseudo-random stream: std::mt19937_64 seeded through
// std::seed_seq from (master seed, stream id). Both are fully specified by the
// standard, so a given (seed, stream) yields the same sequence everywhere.
class RandomStream {
 public:
  RandomStream(std::uint64_t master_seed, std::uint64_t stream_id);

  // Uniform on [0, 1) with 53 random bits.
  double NextUniform();

  // Uniform on [low, high).
  double NextUniform(double low, double high);

  // Uniform integer on the closed range [low, high], unbiased (rejection).
  std::int64_t NextInteger(std::int64_t low, std::int64_t high);

  std::uint64_t NextBits() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace regmatch

#endif  // REGMATCH_RANDOM_H_
