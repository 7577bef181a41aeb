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

#include "fairsc/weighted_algorithms.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fairsc/status.h"

namespace fairsc {

double AcceptanceFraction() { return 0.5 * (1.0 - 1.0 / std::numbers::e); }

int AcceptanceThreshold(int tau) {
  return static_cast<int>(std::ceil(AcceptanceFraction() * tau));
}

int ResampleCap(int num_uncovered) {
  return static_cast<int>(
      std::ceil(8.0 * num_uncovered / (1.0 - 1.0 / std::numbers::e)));
}

Cover WeightedGreedySetCover(const SetSystem& sys) {
  RequireValidInstance(sys);
  std::vector<std::vector<SetId>> incidence(sys.n);
  for (SetId s = 0; s < sys.num_sets(); ++s) {
    for (ElementId e : sys.sets[s]) incidence[e].push_back(s);
  }
  std::vector<int> fresh(sys.num_sets());
  for (SetId s = 0; s < sys.num_sets(); ++s) fresh[s] = sys.sets[s].size();
  std::vector<char> covered(sys.n, 0);
  int uncovered = sys.n;
  Cover cover;
  while (uncovered > 0) {
    SetId best = -1;
    for (SetId s = 0; s < sys.num_sets(); ++s) {
      if (fresh[s] == 0) continue;
      // w_s / fresh_s < w_best / fresh_best
      if (best < 0 ||
          sys.weight(s) * fresh[best] < sys.weight(best) * fresh[s]) {
        best = s;
      }
    }
    if (best < 0) break;
    cover.selected.push_back(best);
    cover.rounds.push_back({best});
    for (ElementId e : sys.sets[best]) {
      if (covered[e]) continue;
      covered[e] = 1;
      --uncovered;
      for (SetId t : incidence[e]) --fresh[t];
    }
  }
  RefreshCover(sys, cover);
  return cover;
}

Cover NaiveWfsc(const SetSystem& sys, const FairnessSpec& spec) {
  spec.CheckAgainst(sys);
  Cover cover = WeightedGreedySetCover(sys);
  const int target = FairPaddingTarget(spec, cover.group_counts);
  std::vector<char> picked(sys.num_sets(), 0);
  for (SetId s : cover.selected) picked[s] = 1;
  std::vector<SetId> padding;
  for (Color h = 0; h < sys.num_colors(); ++h) {
    const int want = static_cast<int>(
        static_cast<std::int64_t>(target) * spec.per_round()[h] / spec.p());
    const int need = want - cover.group_counts[h];
    if (need <= 0) continue;
    std::vector<SetId> pool;
    for (SetId s : sys.SetsOfColor(h)) {
      if (!picked[s]) pool.push_back(s);
    }
    if (static_cast<int>(pool.size()) < need) {
      throw Error(ErrorCode::kInsufficientColor,
                  "color " + std::to_string(h) + " lacks " +
                      std::to_string(need - static_cast<int>(pool.size())) +
                      " unpicked sets for padding");
    }
    std::stable_sort(pool.begin(), pool.end(), [&](SetId a, SetId b) {
      return sys.weight(a) < sys.weight(b);
    });
    padding.insert(padding.end(), pool.begin(), pool.begin() + need);
  }
  if (!padding.empty()) {
    std::sort(padding.begin(), padding.end());
    cover.selected.insert(cover.selected.end(), padding.begin(), padding.end());
    cover.rounds.push_back(padding);
  }
  RefreshCover(sys, cover);
  return cover;
}

Cover GreedyWeightedAllPick(const SetSystem& sys, const FairnessSpec& spec,
                            const AllPickOptions& options) {
  RequireValidInstance(sys);
  spec.CheckAgainst(sys);
  GreedyState state = GreedyState::Initial(sys);
  while (state.uncovered.Any()) {
    const auto best =
        BestRatioTuple(sys, state, spec.per_round(), options.max_candidates);
    if (!best) {
      throw Error(ErrorCode::kAllTuplesZeroCoverage,
                  "every tuple of unpicked sets covers nothing new");
    }
    state.Commit(sys, best->sets);
  }
  return state.cover;
}

TauCandidate WeightedMkccRound(const SetSystem& sys, const GreedyState& state,
                               std::span<const int> per_round, Rng& rng,
                               TauSweepTrace* trace, const LpSolver& solver) {
  const std::vector<ElementId> uncovered = state.uncovered.Elements();
  const int m = static_cast<int>(uncovered.size());
  if (m == 0) {
    throw Error(ErrorCode::kInvalidArgument, "no uncovered elements");
  }
  MkccLp lp =
      BuildWeightedMkccLp(sys, state.RemainingSets(), uncovered, per_round, 1);
  LpConstraint& target_row = lp.lp.constraints.back();
  const std::uint64_t base = rng();
  const int cap = ResampleCap(m);

  TauSweepTrace local;
  TauSweepTrace& sweep = trace ? *trace : local;
  sweep.candidates.clear();
  sweep.first_infeasible_tau = 0;

  std::optional<TauCandidate> best;
  for (int tau = 1; tau <= m; ++tau) {
    target_row.rhs = tau;
    const LpSolution solution = solver.Solve(lp.lp);
    if (solution.status == LpStatus::kInfeasible) {
      // The feasible region only shrinks as tau grows.
      sweep.first_infeasible_tau = tau;
      break;
    }
    if (solution.status != LpStatus::kOptimal) {
      throw Error(ErrorCode::kNumericalFailure,
                  "tau LP unbounded at tau = " + std::to_string(tau));
    }
    const RoundingDistribution dist =
        MakeRoundingDistribution(sys, lp, solution, per_round);
    Rng stream(MixSeed(base, tau));
    const int threshold = AcceptanceThreshold(tau);
    TauCandidate candidate;
    candidate.tau = tau;
    candidate.lp_objective = solution.objective;
    while (true) {
      if (candidate.draws == cap) {
        throw Error(ErrorCode::kResampleCapExceeded,
                    "no sample covered " + std::to_string(threshold) +
                        " elements in " + std::to_string(cap) +
                        " draws at tau = " + std::to_string(tau));
      }
      ++candidate.draws;
      std::vector<SetId> tuple = SampleTuple(dist, stream);
      const int covered = state.NewCoverage(tuple);
      if (covered >= threshold) {
        candidate.tuple = std::move(tuple);
        candidate.covered_new = covered;
        break;
      }
    }
    candidate.ratio = candidate.lp_objective / candidate.covered_new;
    for (SetId s : candidate.tuple) candidate.realized_weight += sys.weight(s);
    if (!best || candidate.ratio < best->ratio) best = candidate;
    sweep.candidates.push_back(std::move(candidate));
  }
  if (!best) {
    throw Error(ErrorCode::kAllTauInfeasible,
                "the tau LP is infeasible for every tau");
  }
  return *best;
}

Cover EffWfsc(const SetSystem& sys, const FairnessSpec& spec, Rng& rng,
              const LpSolver& solver) {
  RequireValidInstance(sys);
  spec.CheckAgainst(sys);
  GreedyState state = GreedyState::Initial(sys);
  while (state.uncovered.Any()) {
    const TauCandidate round =
        WeightedMkccRound(sys, state, spec.per_round(), rng, nullptr, solver);
    state.Commit(sys, round.tuple);
  }
  return state.cover;
}

}  // namespace fairsc
