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

#ifndef REGMATCH_REPORT_H_
#define REGMATCH_REPORT_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "regmatch/game.h"
#include "regmatch/harness.h"
#include "regmatch/metrics.h"

namespace regmatch {

// Trace CSV: "method,seed,t,alpha,alpha_clamped", optionally followed by the
// maximising triple as "player,action,deviation". Reals use FormatReal.
std::string TraceCsvHeader(bool with_argmax = false);
std::string TraceCsvRows(const ExperimentTrace& trace, bool with_argmax = false);
std::string TraceCsv(const ExperimentTrace& trace, bool with_argmax = false);

// Sidecar JSON object echoing the run configuration, the resolved mu per
// player and timing. Not deterministic: it carries wall-clock data.
std::string TraceMetadataJson(const ExperimentTrace& trace);

// "seed,first,second,auc_first,auc_second,auc_ratio,second_wins" plus one row
// per seed.
std::string ComparisonSummaryCsv(const ComparisonSummary& summary);

// "player,action,deviation,value" per triple, then "*,*,*,<alpha>".
std::string AlphaReportCsv(const AlphaReport& report);

// History file: one profile per line as comma-separated action indices.
// Blank lines and lines starting with '#' are skipped. Throws
// std::invalid_argument on a malformed line.
std::vector<PureProfile> ParseHistoryCsv(std::istream& in);
std::string HistoryCsv(const std::vector<PureProfile>& history);

// Regret dumps: for every snapshot and player a "# t=<t> player=<i>" line
// followed by the matrix rows of FormatRegretMatrix.
std::string RegretDumpText(const ExperimentTrace& trace);

struct RegretDumpEntry {
  std::int64_t t;
  int player;
  std::vector<std::vector<double>> rows;
};
std::vector<RegretDumpEntry> ParseRegretDump(std::istream& in);

// "1,2,3", "1..20" or a mix such as "1..3,7". Ranges are inclusive.
std::vector<std::uint64_t> ParseSeedList(std::string_view text);

// Per-player distributions separated by ';', entries by ',':
// "0.5,0.5;0.25,0.25,0.25,0.25".
std::vector<std::vector<double>> ParsePolicyList(std::string_view text);

}  // namespace regmatch

#endif  // REGMATCH_REPORT_H_
