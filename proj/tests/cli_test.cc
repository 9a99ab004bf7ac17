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

// Exercises the regmatch binary end to end through the shell.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include "doctest.h"
#include "fixtures.h"
#include "regmatch/game_io.h"

namespace regmatch {
namespace {

namespace fs = std::filesystem;

struct CliResult {
  int exit_code;
  std::string out;
};

fs::path Scratch() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / ("regmatch_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

CliResult Cli(const std::string& args) {
  const fs::path out = Scratch() / "stdout.txt";
  const std::string command = "cd '" + Scratch().string() + "' && '" REGMATCH_CLI_PATH "' " +
                              args + " > '" + out.string() + "' 2>&1";
  const int status = std::system(command.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, Slurp(out)};
}

int CountLines(const std::string& text) {
  int n = 0;
  for (char c : text) n += c == '\n';
  return n;
}

TEST_CASE("generate writes a deterministic game file") {
  REQUIRE(Cli("generate --actions 3,4 --low -1000 --high 1000 --seed 1 -o g.json").exit_code == 0);
  const std::string first = Slurp(Scratch() / "g.json");
  const Game game = ParseGame(first);
  CHECK(game.ActionCounts() == std::vector<int>{3, 4});
  CHECK(game.PayoffTensor(0).size() == 12);
  CHECK(game.PayoffTensor(1).size() == 12);
  REQUIRE(Cli("generate --actions 3,4 --low -1000 --high 1000 --seed 1 -o g2.json").exit_code == 0);
  CHECK(Slurp(Scratch() / "g2.json") == first);

  const CliResult degenerate = Cli("generate --actions 1,1 -o one.json");
  CHECK(degenerate.exit_code == 0);
  CHECK(degenerate.out.find("fnv1a64=") != std::string::npos);
  CHECK(ParseGame(Slurp(Scratch() / "one.json")).NumProfiles() == 1);
}

TEST_CASE("generate usage errors") {
  CHECK(Cli("generate").exit_code == 2);
  CHECK(Cli("generate --actions 3,0").exit_code == 2);
  CHECK(Cli("generate --actions 2,2 --low 1 --high 1").exit_code == 2);
  CHECK(Cli("").exit_code == 2);
  CHECK(Cli("frobnicate").exit_code == 2);
}

TEST_CASE("run writes the paper schedule and matches inline generation") {
  REQUIRE(Cli("generate --actions 3,4 --seed 7 -o g7.json").exit_code == 0);
  const CliResult run =
      Cli("run --game-file g7.json --method original -T 1000 --measure-every 20 --seed 7 -o tr.csv");
  REQUIRE(run.exit_code == 0);
  CHECK(run.out.find("final alpha") != std::string::npos);
  const std::string trace = Slurp(Scratch() / "tr.csv");
  CHECK(CountLines(trace) == 51);
  CHECK(fs::exists(Scratch() / "tr.csv.meta.json"));

  REQUIRE(Cli("run --actions 3,4 -T 1000 --seed 7 -o inline.csv").exit_code == 0);
  CHECK(Slurp(Scratch() / "inline.csv") == trace);

  REQUIRE(Cli("run --game-file g7.json --method softmax -T 1000 --seed 7 -o soft.csv").exit_code == 0);
  const std::string soft = Slurp(Scratch() / "soft.csv");
  CHECK(CountLines(soft) == 51);
  CHECK(soft.find("\nsoftmax,7,20,") != std::string::npos);
}

TEST_CASE("run errors and exit codes") {
  REQUIRE(Cli("generate --actions 3,4 --seed 2 -o g2b.json").exit_code == 0);
  CHECK(Cli("run --actions 3,4 -T 0").exit_code == 2);
  CHECK(Cli("run -T 10").exit_code == 2);
  CHECK(Cli("run --actions 3,4 -T 10 --measure-every 20").exit_code == 2);
  CHECK(Cli("run --game-file g2b.json --actions 3,4").exit_code == 2);
  CHECK(Cli("run --actions 3,4 --method faster").exit_code == 2);
  CHECK(Cli("run --actions 3,4 --mu 1 --mu-safety 2").exit_code == 2);
  const CliResult mu = Cli("run --game-file g2b.json --mu 1 -T 100");
  CHECK(mu.exit_code == 1);
  CHECK(mu.out.find("player") != std::string::npos);
  CHECK(mu.out.find("row") != std::string::npos);
}

TEST_CASE("run side outputs") {
  REQUIRE(Cli("run --actions 2,2 -T 40 --measure-every 10 --with-argmax --dump-regrets-every 20 "
              "--history-out hist.csv -o side.csv")
              .exit_code == 0);
  CHECK(Slurp(Scratch() / "side.csv").rfind("method,seed,t,alpha,alpha_clamped,player", 0) == 0);
  CHECK(CountLines(Slurp(Scratch() / "hist.csv")) == 40);
  // Two snapshots x two players x (header + 2 rows).
  CHECK(CountLines(Slurp(Scratch() / "side.csv.regrets.txt")) == 12);
}

TEST_CASE("compare emits paired traces and a summary") {
  const CliResult three =
      Cli("compare --actions 3,4 --low -1000 --high 1000 --seeds 1,2,3 -T 1000 -o cmp.csv");
  REQUIRE(three.exit_code == 0);
  CHECK(three.out.find("in ") != std::string::npos);
  CHECK(CountLines(Slurp(Scratch() / "cmp.csv")) == 1 + 3 * 2 * 50);
  CHECK(CountLines(Slurp(Scratch() / "cmp.csv.summary.csv")) == 4);

  REQUIRE(Cli("compare --actions 3,4 --seeds 5 -o one.csv").exit_code == 0);
  CHECK(CountLines(Slurp(Scratch() / "one.csv.summary.csv")) == 2);

  REQUIRE(Cli("compare --actions 3,4 --seeds 1..20 -o twenty.csv").exit_code == 0);
  CHECK(CountLines(Slurp(Scratch() / "twenty.csv.summary.csv")) == 21);

  CHECK(Cli("compare --actions 3,4 --seeds 3..1").exit_code == 2);
  CHECK(Cli("compare --actions 3,4").exit_code == 2);
}

TEST_CASE("eval reports alpha of a history") {
  {
    std::ofstream(Scratch() / "mp.json") << SerializeGame(testing::MatchingPennies());
    std::ofstream(Scratch() / "uniform.csv") << "0,0\n0,1\n1,0\n1,1\n";
    std::ofstream(Scratch() / "hh.csv") << "0,0\n";
    std::ofstream(Scratch() / "empty.csv") << "# nothing\n";
    std::ofstream(Scratch() / "wide.csv") << "0,0,0\n";
  }
  const CliResult uniform = Cli("eval --game-file mp.json --history uniform.csv --triples");
  REQUIRE(uniform.exit_code == 0);
  CHECK(uniform.out.find("alpha 0\n") != std::string::npos);
  CHECK(uniform.out.find("player,action,deviation,value\n") != std::string::npos);

  const CliResult hh = Cli("eval --game-file mp.json --history hh.csv");
  REQUIRE(hh.exit_code == 0);
  CHECK(hh.out == "alpha 2\nalpha_clamped 2\n");

  CHECK(Cli("eval --game-file mp.json --history empty.csv").exit_code == 2);
  CHECK(Cli("eval --game-file mp.json --history wide.csv").exit_code == 1);
  CHECK(Cli("eval --game-file mp.json").exit_code == 2);
}

TEST_CASE("output directory from the environment") {
  const fs::path dir = Scratch() / "envout";
  const std::string command = "REGMATCH_OUTPUT_DIR='" + dir.string() +
                              "' '" REGMATCH_CLI_PATH "' generate --actions 2,2 -o nested/e.json > /dev/null";
  CHECK(std::system(command.c_str()) == 0);
  CHECK(fs::exists(dir / "nested" / "e.json"));
}

}  // namespace
}  // namespace regmatch
