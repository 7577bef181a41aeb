// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// fairsc: run fair set cover algorithms on one instance (`solve`) or compare
// them over seeded random trials (`compare`).
//
// Exit codes: 0 success, 2 input error, 3 algorithm error.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fairsc/cover_algorithms.h"
#include "fairsc/generalized_fairness.h"
#include "fairsc/generators.h"
#include "fairsc/instance.h"
#include "fairsc/io.h"
#include "fairsc/multicover.h"
#include "fairsc/oracles.h"
#include "fairsc/random.h"
#include "fairsc/status.h"
#include "fairsc/weighted_algorithms.h"
#include "json.hpp"

namespace fairsc {
namespace {

using json = nlohmann::ordered_json;

constexpr int kReportSchemaVersion = 1;
constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitAlgorithm = 3;

const std::vector<std::string> kAlgorithms = {
    "sc",        "naive",       "allpick",      "eff-greedy",
    "eff-lp",    "wfsc-naive",  "wfsc-allpick", "wfsc-eff",
    "gfsc",      "multicover",  "opt-sc",       "opt-fair"};

struct Options {
  std::string algo = "allpick";
  std::string instance;
  std::string format = "json";
  std::string generator = "uniform";
  int n = 30;
  int m = 8;
  int k = 2;
  double coverage_p = 0.3;
  double zipf_s = 1.0;
  std::vector<double> weight_range;
  std::string fractions;
  double epsilon = 0.0;
  std::string requirements;
  std::string subroutine;
  int trials = 20;
  std::uint64_t seed = 1;
  std::string output = "text";
  std::string out;
  std::string algos = "sc,naive,allpick,eff-greedy,eff-lp";
};

struct RunResult {
  std::string algorithm;
  Cover cover;
  double fairness_ratio = 1.0;
  double wall_time_ms = 0.0;
  std::uint64_t seed = 0;
  std::optional<EpsilonAudit> audit;
  std::optional<std::vector<int>> multicover_counts;
};

bool IsFairAlgorithm(const std::string& algo) {
  return algo != "sc" && algo != "opt-sc";
}

SetSystem GenerateInstance(const Options& opt, std::uint64_t seed) {
  if (opt.generator == "biased") return GenBiased(opt.n, opt.m, seed);
  SyntheticParams params;
  params.n = opt.n;
  params.m_per_color = opt.m;
  params.k = opt.k;
  params.seed = seed;
  if (opt.generator == "uniform") {
    params.coverage = CoverageDist::Uniform(opt.coverage_p);
  } else if (opt.generator == "zipf") {
    params.coverage = CoverageDist::Zipf(opt.zipf_s);
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown generator " + opt.generator);
  }
  if (!opt.weight_range.empty()) {
    params.weights = WeightDist::Uniform(opt.weight_range[0], opt.weight_range[1]);
  }
  return GenSynthetic(params);
}

SetSystem LoadOrGenerate(const Options& opt, std::uint64_t seed) {
  SetSystem sys = opt.instance.empty()
                      ? GenerateInstance(opt, seed)
                      : LoadInstance(opt.instance, ParseInstanceFormat(opt.format));
  RequireValidInstance(sys);
  return sys;
}

FairnessSpec SpecFor(const Options& opt, const SetSystem& sys) {
  if (opt.fractions.empty()) return FairnessSpec::CountParity(sys.num_colors());
  if (opt.fractions == "ratio") return FairnessSpec::RatioParity(sys);
  return FairnessSpec::Parse(opt.fractions);
}

std::vector<int> Requirements(const Options& opt, const SetSystem& sys) {
  if (opt.requirements.empty()) return std::vector<int>(sys.n, 1);
  const bool constant =
      opt.requirements.find_first_not_of("0123456789") == std::string::npos;
  if (constant) return std::vector<int>(sys.n, std::stoi(opt.requirements));
  std::ifstream in(opt.requirements);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + opt.requirements);
  try {
    return json::parse(in).get<std::vector<int>>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError,
                opt.requirements + ": expected a JSON array of integers");
  }
}

MkccSubroutine SubroutineFor(const Options& opt) {
  if (opt.subroutine.empty() || opt.subroutine == "greedy") {
    return MkccSubroutine::kGreedy;
  }
  return MkccSubroutine::kLpRound;
}

RunResult RunAlgorithm(const Options& opt, const std::string& algo,
                       const SetSystem& sys, std::uint64_t seed) {
  const FairnessSpec spec = SpecFor(opt, sys);
  if (IsFairAlgorithm(algo)) spec.CheckAgainst(sys);
  Rng rng(seed);
  RunResult result;
  result.algorithm = algo;
  result.seed = seed;
  const auto start = std::chrono::steady_clock::now();
  if (algo == "sc") {
    result.cover = GreedySetCover(sys);
  } else if (algo == "naive") {
    result.cover = NaiveFsc(sys, spec);
  } else if (algo == "allpick") {
    result.cover = GreedyAllPick(sys, spec);
  } else if (algo == "eff-greedy") {
    result.cover = EffFsc(sys, spec, MkccSubroutine::kGreedy, rng);
  } else if (algo == "eff-lp") {
    result.cover = EffFsc(sys, spec, MkccSubroutine::kLpRound, rng);
  } else if (algo == "wfsc-naive") {
    result.cover = NaiveWfsc(sys, spec);
  } else if (algo == "wfsc-allpick") {
    result.cover = GreedyWeightedAllPick(sys, spec);
  } else if (algo == "wfsc-eff") {
    result.cover = EffWfsc(sys, spec, rng);
  } else if (algo == "gfsc") {
    const GfscMode mode = opt.subroutine.empty() ? GfscMode::kExhaustive
                          : opt.subroutine == "greedy" ? GfscMode::kGreedySub
                                                       : GfscMode::kLpSub;
    if (opt.epsilon > 0.0) {
      EpsilonResult eps =
          EpsilonGfsc(sys, EpsilonSpec::Make(spec, opt.epsilon), mode, rng);
      result.cover = std::move(eps.cover);
      result.audit = std::move(eps.audit);
    } else {
      result.cover = Gfsc(sys, spec, mode, rng);
    }
  } else if (algo == "multicover") {
    const MulticoverInstance inst{sys, Requirements(opt, sys)};
    const MulticoverMode mode =
        opt.subroutine.empty() ? MulticoverMode::kExhaustive
        : SubroutineFor(opt) == MkccSubroutine::kGreedy
            ? MulticoverMode::kMkccGreedy
            : MulticoverMode::kMkccLp;
    MulticoverResult mc = FairMulticoverGreedy(inst, spec, mode, rng);
    result.cover = std::move(mc.cover);
    result.multicover_counts = std::move(mc.final_counts);
    for (ElementId e = 0; e < sys.n; ++e) {
      if ((*result.multicover_counts)[e] < inst.requirements[e]) {
        throw Error(ErrorCode::kNoProgress, "multicover left element " +
                                                std::to_string(e) + " short");
      }
    }
  } else if (algo == "opt-sc") {
    result.cover = OptSetCover(sys);
  } else if (algo == "opt-fair") {
    auto cover = OptFairCover(sys, spec, sys.weighted());
    if (!cover) {
      throw Error(ErrorCode::kInsufficientColor, "no exactly fair cover exists");
    }
    result.cover = std::move(*cover);
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown algorithm " + algo);
  }
  result.wall_time_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  if (!result.multicover_counts && !CoversUniverse(sys, result.cover.selected)) {
    throw Error(ErrorCode::kNoProgress, algo + " returned a non-cover");
  }
  if (spec.num_colors() == sys.num_colors()) {
    result.fairness_ratio =
        ComputeFairnessReport(sys, spec, result.cover).fairness_ratio;
  } else {
    result.fairness_ratio = std::nan("");
  }
  if (IsFairAlgorithm(algo) && !IsExactlyFair(result.cover, spec)) {
    throw Error(ErrorCode::kNoProgress, algo + " returned an unfair cover");
  }
  return result;
}

json ReportJson(const RunResult& r) {
  json doc = {
      {"schema_version", kReportSchemaVersion},
      {"algorithm", r.algorithm},
      {"cover_size", r.cover.size()},
      {"total_weight", r.cover.total_weight},
      {"fairness_ratio", r.fairness_ratio},
      {"per_group_counts", r.cover.group_counts},
      {"wall_time_ms", r.wall_time_ms},
      {"seed", r.seed},
      {"selected", r.cover.selected},
      {"rounds", r.cover.rounds},
  };
  if (r.audit) {
    doc["epsilon_audit"] = {{"passed", r.audit->passed},
                            {"lower", r.audit->lower},
                            {"counts", r.audit->counts},
                            {"upper", r.audit->upper},
                            {"implied_factor", r.audit->implied_factor}};
  }
  if (r.multicover_counts) doc["final_counts"] = *r.multicover_counts;
  return doc;
}

std::string JoinInts(const std::vector<int>& v, char sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string FormatSolve(const RunResult& r, const std::string& output) {
  if (output == "json") return ReportJson(r).dump(2) + "\n";
  char buf[512];
  if (output == "csv") {
    std::snprintf(buf, sizeof(buf), "%s,%d,%.12g,%.12g,%s,%.3f,%llu\n",
                  r.algorithm.c_str(), r.cover.size(), r.cover.total_weight,
                  r.fairness_ratio, JoinInts(r.cover.group_counts, ';').c_str(),
                  r.wall_time_ms, static_cast<unsigned long long>(r.seed));
    return "algorithm,cover_size,total_weight,fairness_ratio,per_group_counts,"
           "wall_time_ms,seed\n" +
           std::string(buf);
  }
  std::ostringstream out;
  out << "algorithm:        " << r.algorithm << "\n"
      << "cover_size:       " << r.cover.size() << "\n"
      << "total_weight:     " << r.cover.total_weight << "\n"
      << "fairness_ratio:   " << r.fairness_ratio << "\n"
      << "per_group_counts: " << JoinInts(r.cover.group_counts, ' ') << "\n"
      << "wall_time_ms:     " << r.wall_time_ms << "\n"
      << "seed:             " << r.seed << "\n"
      << "selected:         " << JoinInts(r.cover.selected, ' ') << "\n";
  if (r.audit) {
    out << "epsilon_audit:    " << (r.audit->passed ? "passed" : "FAILED")
        << " (implied factor " << r.audit->implied_factor << ")\n";
  }
  return out.str();
}

void Emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out);
  if (!f) throw Error(ErrorCode::kIoError, "cannot write " + opt.out);
  f << text;
}

int CmdSolve(const Options& opt) {
  const SetSystem sys = LoadOrGenerate(opt, opt.seed);
  const RunResult result = RunAlgorithm(opt, opt.algo, sys, opt.seed);
  Emit(opt, FormatSolve(result, opt.output));
  return kExitOk;
}

struct Stats {
  double mean = 0.0;
  double stddev = 0.0;
};

Stats Summarize(const std::vector<double>& xs) {
  Stats s;
  if (xs.empty()) return {std::nan(""), std::nan("")};
  for (double x : xs) s.mean += x;
  s.mean /= xs.size();
  for (double x : xs) s.stddev += (x - s.mean) * (x - s.mean);
  s.stddev = xs.size() > 1 ? std::sqrt(s.stddev / (xs.size() - 1)) : 0.0;
  return s;
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int CmdCompare(const Options& opt) {
  const std::vector<std::string> algos = SplitList(opt.algos);
  for (const auto& a : algos) {
    if (std::find(kAlgorithms.begin(), kAlgorithms.end(), a) == kAlgorithms.end()) {
      throw Error(ErrorCode::kInvalidArgument, "unknown algorithm " + a);
    }
  }
  if (opt.trials <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "--trials must be positive");
  }
  // Instances are generated before any timing; per-trial seeds are derived
  // from --seed only.
  std::vector<SetSystem> instances;
  for (int t = 0; t < opt.trials; ++t) {
    instances.push_back(LoadOrGenerate(opt, MixSeed(opt.seed, t)));
  }
  struct Row {
    std::string algorithm;
    std::vector<double> size, weight, fairness, time;
    int failures = 0;
    std::string first_error;
  };
  std::vector<Row> rows;
  for (const auto& algo : algos) {
    Row row;
    row.algorithm = algo;
    for (int t = 0; t < opt.trials; ++t) {
      try {
        const RunResult r = RunAlgorithm(opt, algo, instances[t],
                                         MixSeed(opt.seed ^ 0x5eed, t));
        row.size.push_back(r.cover.size());
        row.weight.push_back(r.cover.total_weight);
        row.fairness.push_back(r.fairness_ratio);
        row.time.push_back(r.wall_time_ms);
      } catch (const Error& e) {
        ++row.failures;
        if (row.first_error.empty()) row.first_error = e.what();
      }
    }
    rows.push_back(std::move(row));
  }

  std::ostringstream out;
  if (opt.output == "json") {
    json doc = {{"schema_version", kReportSchemaVersion},
                {"trials", opt.trials},
                {"seed", opt.seed},
                {"rows", json::array()}};
    for (const Row& r : rows) {
      const Stats s = Summarize(r.size), w = Summarize(r.weight),
                  f = Summarize(r.fairness), t = Summarize(r.time);
      json row = {{"algorithm", r.algorithm},
                  {"completed", r.size.size()},
                  {"failures", r.failures},
                  {"size_mean", s.mean},
                  {"size_std", s.stddev},
                  {"weight_mean", w.mean},
                  {"fairness_mean", f.mean},
                  {"fairness_std", f.stddev},
                  {"time_mean", t.mean},
                  {"time_std", t.stddev}};
      if (!r.first_error.empty()) row["first_error"] = r.first_error;
      doc["rows"].push_back(std::move(row));
    }
    out << doc.dump(2) << "\n";
  } else if (opt.output == "csv") {
    out << "algorithm,completed,failures,size_mean,size_std,weight_mean,"
           "fairness_mean,fairness_std,time_mean,time_std\n";
    for (const Row& r : rows) {
      const Stats s = Summarize(r.size), w = Summarize(r.weight),
                  f = Summarize(r.fairness), t = Summarize(r.time);
      char buf[512];
      std::snprintf(buf, sizeof(buf),
                    "%s,%zu,%d,%.6g,%.6g,%.6g,%.6g,%.6g,%.6g,%.6g\n",
                    r.algorithm.c_str(), r.size.size(), r.failures, s.mean,
                    s.stddev, w.mean, f.mean, f.stddev, t.mean, t.stddev);
      out << buf;
    }
  } else {
    char buf[512];
    std::snprintf(buf, sizeof(buf), "%-14s %9s %17s %17s %17s %s\n",
                  "algorithm", "completed", "size", "fairness", "time_ms",
                  "failures");
    out << buf;
    for (const Row& r : rows) {
      const Stats s = Summarize(r.size), f = Summarize(r.fairness),
                  t = Summarize(r.time);
      std::snprintf(buf, sizeof(buf),
                    "%-14s %9zu %8.3f +- %-5.2f %8.3f +- %-5.3f %8.3f +- %-5.2f %d\n",
                    r.algorithm.c_str(), r.size.size(), s.mean, s.stddev,
                    f.mean, f.stddev, t.mean, t.stddev, r.failures);
      out << buf;
    }
  }
  Emit(opt, out.str());
  return kExitOk;
}

void AddCommonOptions(CLI::App* cmd, Options& opt) {
  cmd->add_option("--instance", opt.instance, "Instance file");
  cmd->add_option("--format", opt.format, "Instance file format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--generator", opt.generator,
                  "Generator used when no instance is given")
      ->check(CLI::IsMember({"uniform", "zipf", "biased"}));
  cmd->add_option("--n", opt.n, "Universe size");
  cmd->add_option("--m", opt.m, "Sets per color");
  cmd->add_option("--k", opt.k, "Number of colors");
  cmd->add_option("--coverage-p", opt.coverage_p, "Inclusion probability");
  cmd->add_option("--zipf-s", opt.zipf_s, "Zipf exponent");
  cmd->add_option("--weight-range", opt.weight_range,
                  "Uniform set weights in [lo, hi]")
      ->expected(2);
  cmd->add_option("--fractions", opt.fractions,
                  "Group fractions a/b,c/d,... or 'ratio' (default: equal)");
  cmd->add_option("--epsilon", opt.epsilon, "Audit gfsc output at this epsilon");
  cmd->add_option("--requirements", opt.requirements,
                  "Multicover requirements: a constant or a JSON array file");
  cmd->add_option("--subroutine", opt.subroutine,
                  "Round solver for gfsc and multicover")
      ->check(CLI::IsMember({"greedy", "lp"}));
  cmd->add_option("--seed", opt.seed, "Random seed");
  cmd->add_option("--output", opt.output, "Report format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  cmd->add_option("--out", opt.out, "Write the report to this file");
}

int Main(int argc, char** argv) {
  CLI::App app{"Fair set cover solver"};
  app.require_subcommand(1);
  Options opt;
  CLI::App* solve = app.add_subcommand("solve", "Run one algorithm");
  AddCommonOptions(solve, opt);
  solve->add_option("--algo", opt.algo, "Algorithm")
      ->check(CLI::IsMember(kAlgorithms));
  CLI::App* compare = app.add_subcommand("compare", "Compare algorithms");
  AddCommonOptions(compare, opt);
  compare->add_option("--algos", opt.algos, "Comma-separated algorithms");
  compare->add_option("--trials", opt.trials, "Number of seeded trials");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }
  try {
    return solve->parsed() ? CmdSolve(opt) : CmdCompare(opt);
  } catch (const Error& e) {
    const bool input = IsInputError(e.code());
    json err = {{"error", std::string(ErrorCodeName(e.code()))},
                {"message", e.what()}};
    if (e.code() == ErrorCode::kBudgetExceeded) {
      err["hint"] = "use eff-greedy, eff-lp or --subroutine instead";
    }
    std::cerr << err.dump() << "\n";
    return input ? kExitInput : kExitAlgorithm;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "InvalidArgument"}, {"message", e.what()}}.dump()
              << "\n";
    return kExitInput;
  }
}

}  // namespace
}  // namespace fairsc

int main(int argc, char** argv) { return fairsc::Main(argc, argv); }
