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

#include "regmatch/report.h"

#include <algorithm>
#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "regmatch/game_io.h"

namespace regmatch {
namespace {

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

int ParseIndex(std::string_view field, std::size_t line_number) {
  const std::string text = Trim(field);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("history line " + std::to_string(line_number) +
                                ": '" + text + "' is not an action index");
  }
  return value;
}

std::uint64_t ParseSeed(std::string_view field) {
  const std::string text = Trim(field);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("'" + text + "' is not a seed");
  }
  return value;
}

std::vector<std::string_view> Split(std::string_view text, char separator) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto at = text.find(separator);
    parts.push_back(text.substr(0, at));
    if (at == std::string_view::npos) return parts;
    text.remove_prefix(at + 1);
  }
}

}  // namespace

std::string TraceCsvHeader(bool with_argmax) {
  std::string header = "method,seed,t,alpha,alpha_clamped";
  if (with_argmax) header += ",player,action,deviation";
  return header + "\n";
}

std::string TraceCsvRows(const ExperimentTrace& trace, bool with_argmax) {
  std::ostringstream out;
  for (const TraceRow& row : trace.rows) {
    out << MethodName(trace.method) << ',' << trace.seed << ',' << row.t << ','
        << FormatReal(row.alpha) << ',' << FormatReal(std::max(row.alpha, 0.0));
    if (with_argmax) {
      if (row.argmax) {
        out << ',' << row.argmax->player << ',' << row.argmax->action << ','
            << row.argmax->deviation;
      } else {
        out << ",,,";
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string TraceCsv(const ExperimentTrace& trace, bool with_argmax) {
  return TraceCsvHeader(with_argmax) + TraceCsvRows(trace, with_argmax);
}

std::string TraceMetadataJson(const ExperimentTrace& trace) {
  nlohmann::ordered_json meta;
  meta["method"] = MethodName(trace.method);
  meta["seed"] = trace.seed;
  meta["iterations"] = trace.iterations;
  meta["measure_every"] = trace.measure_every;
  meta["mu_policy"] = {
      {"mode", trace.mu_policy.mode == MuPolicy::Mode::kAuto ? "auto" : "fixed"},
      {"fixed_value", trace.mu_policy.fixed_value},
      {"safety_factor", trace.mu_policy.safety_factor}};
  meta["action_counts"] = trace.game.ActionCounts();
  meta["resolved_mu"] = trace.resolved_mu;
  meta["rows"] = trace.rows.size();
  if (!trace.rows.empty()) meta["final_alpha"] = trace.rows.back().alpha;
  meta["distinct_profiles"] = trace.final_distribution.counts().size();
  meta["elapsed_seconds"] = trace.elapsed_seconds;
  return meta.dump(2) + "\n";
}

std::string ComparisonSummaryCsv(const ComparisonSummary& summary) {
  std::ostringstream out;
  out << "seed,first,second,auc_first,auc_second,auc_ratio,second_wins\n";
  for (const SeedComparison& s : summary.per_seed) {
    out << s.seed << ',' << MethodName(summary.first) << ','
        << MethodName(summary.second) << ',' << FormatReal(s.auc_first) << ','
        << FormatReal(s.auc_second) << ',' << FormatReal(s.auc_ratio) << ','
        << (s.auc_second < s.auc_first ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string AlphaReportCsv(const AlphaReport& report) {
  std::ostringstream out;
  out << "player,action,deviation,value\n";
  for (const TripleValue& triple : report.per_triple) {
    out << triple.player << ',' << triple.action << ',' << triple.deviation << ','
        << FormatReal(triple.value) << '\n';
  }
  out << "*,*,*," << FormatReal(report.alpha) << '\n';
  return out.str();
}

std::vector<PureProfile> ParseHistoryCsv(std::istream& in) {
  std::vector<PureProfile> history;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    PureProfile profile;
    std::string_view rest = trimmed;
    while (true) {
      const auto comma = rest.find(',');
      profile.push_back(ParseIndex(rest.substr(0, comma), line_number));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    history.push_back(std::move(profile));
  }
  return history;
}

std::string HistoryCsv(const std::vector<PureProfile>& history) {
  std::ostringstream out;
  for (const PureProfile& profile : history) {
    for (std::size_t i = 0; i < profile.size(); ++i) {
      out << (i ? "," : "") << profile[i];
    }
    out << '\n';
  }
  return out.str();
}

std::string RegretDumpText(const ExperimentTrace& trace) {
  std::ostringstream out;
  for (const RegretSnapshot& snapshot : trace.regret_dumps) {
    for (const RegretMatrix& regrets : snapshot.regrets) {
      out << "# t=" << snapshot.t << " player=" << regrets.player() << '\n'
          << FormatRegretMatrix(regrets);
    }
  }
  return out.str();
}

std::vector<RegretDumpEntry> ParseRegretDump(std::istream& in) {
  std::vector<RegretDumpEntry> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      RegretDumpEntry entry{};
      if (std::sscanf(line.c_str(), "# t=%" SCNd64 " player=%d", &entry.t, &entry.player) != 2) {
        throw std::invalid_argument("regret dump: bad header '" + line + "'");
      }
      entries.push_back(std::move(entry));
      continue;
    }
    if (entries.empty()) throw std::invalid_argument("regret dump: row before header");
    std::istringstream fields(line);
    std::vector<double> row;
    for (std::string token; fields >> token;) row.push_back(std::stod(token));
    entries.back().rows.push_back(std::move(row));
  }
  return entries;
}

std::vector<std::uint64_t> ParseSeedList(std::string_view text) {
  std::vector<std::uint64_t> seeds;
  for (std::string_view part : Split(text, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string_view::npos) {
      seeds.push_back(ParseSeed(part));
      continue;
    }
    const std::uint64_t first = ParseSeed(part.substr(0, dots));
    const std::uint64_t last = ParseSeed(part.substr(dots + 2));
    if (last < first) {
      throw std::invalid_argument("seed range '" + std::string(part) + "' is empty");
    }
    for (std::uint64_t s = first;; ++s) {
      seeds.push_back(s);
      if (s == last) break;
    }
  }
  return seeds;
}

std::vector<std::vector<double>> ParsePolicyList(std::string_view text) {
  std::vector<std::vector<double>> policies;
  for (std::string_view player : Split(text, ';')) {
    std::vector<double> probs;
    for (std::string_view entry : Split(player, ',')) {
      const std::string value = Trim(entry);
      std::size_t used = 0;
      double p = 0.0;
      try {
        p = std::stod(value, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (value.empty() || used != value.size()) {
        throw std::invalid_argument("'" + value + "' is not a probability");
      }
      probs.push_back(p);
    }
    policies.push_back(std::move(probs));
  }
  return policies;
}

}  // namespace regmatch
