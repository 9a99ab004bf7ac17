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

#ifndef REGMATCH_GAME_IO_H_
#define REGMATCH_GAME_IO_H_

#include <iosfwd>
#include <string>

#include "regmatch/game.h"

namespace regmatch {

inline constexpr int kGameFileVersion = 1;

// Decimal form with 17 significant digits ("%.17g"), which
// round-trips every finite double exactly.
std::string FormatReal(double value);

// Game file: a JSON object
//   {"version": 1, "action_counts": [...], "payoffs": [[...], ...]}
// with one flat row-major tensor per player (player 0 slowest-varying).
std::string SerializeGame(const Game& game);
void WriteGame(std::ostream& out, const Game& game);

// Throws std::invalid_argument on malformed input, an unknown version or a
// tensor whose shape does not match the action counts.
Game ParseGame(const std::string& text);
Game ReadGame(std::istream& in);
Game ReadGameFile(const std::string& path);
void WriteGameFile(const std::string& path, const Game& game);

}  // namespace regmatch

#endif  // REGMATCH_GAME_IO_H_
