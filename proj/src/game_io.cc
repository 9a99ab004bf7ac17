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

#include "regmatch/game_io.h"

#include <cstdio>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace regmatch {

std::string FormatReal(double value) {
  char buffer[32];
  const int n = std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return std::string(buffer, static_cast<std::size_t>(n));
}

std::string SerializeGame(const Game& game) {
  std::ostringstream out;
  out << "{\n  \"version\": " << kGameFileVersion << ",\n  \"action_counts\": [";
  const auto& counts = game.ActionCounts();
  for (std::size_t i = 0; i < counts.size(); ++i) {
    out << (i ? ", " : "") << counts[i];
  }
  out << "],\n  \"payoffs\": [\n";
  for (int i = 0; i < game.NumPlayers(); ++i) {
    out << "    [";
    const auto tensor = game.PayoffTensor(i);
    for (std::size_t s = 0; s < tensor.size(); ++s) {
      out << (s ? ", " : "") << FormatReal(tensor[s]);
    }
    out << "]" << (i + 1 < game.NumPlayers() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

void WriteGame(std::ostream& out, const Game& game) { out << SerializeGame(game); }

Game ParseGame(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("game file: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("game file: expected an object");
  for (const char* key : {"version", "action_counts", "payoffs"}) {
    if (!doc.contains(key)) {
      throw std::invalid_argument(std::string("game file: missing field '") + key + "'");
    }
  }
  if (!doc["version"].is_number_integer() ||
      doc["version"].get<int>() != kGameFileVersion) {
    throw std::invalid_argument("game file: unsupported version");
  }
  std::vector<int> counts;
  std::vector<std::vector<double>> payoffs;
  try {
    counts = doc["action_counts"].get<std::vector<int>>();
    payoffs = doc["payoffs"].get<std::vector<std::vector<double>>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("game file: ") + e.what());
  }
  return Game(std::move(counts), std::move(payoffs));
}

Game ReadGame(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return ParseGame(text);
}

Game ReadGameFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open game file '" + path + "'");
  return ReadGame(in);
}

void WriteGameFile(const std::string& path, const Game& game) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write game file '" + path + "'");
  WriteGame(out, game);
}

}  // namespace regmatch
