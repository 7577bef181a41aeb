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

#include "fairsc/generalized_fairness.h"

#include <cmath>
#include <numbers>
#include <string>

#include "fairsc/cover_algorithms.h"
#include "fairsc/status.h"
#include "fairsc/weighted_algorithms.h"

namespace fairsc {

Cover Gfsc(const SetSystem& sys, const FairnessSpec& spec, GfscMode mode,
           Rng& rng, const LpSolver& solver) {
  spec.CheckAgainst(sys);
  switch (mode) {
    case GfscMode::kExhaustive:
      return GreedyAllPick(sys, spec);
    case GfscMode::kGreedySub:
      return EffFsc(sys, spec, MkccSubroutine::kGreedy, rng, nullptr, solver);
    case GfscMode::kLpSub:
      return EffFsc(sys, spec, MkccSubroutine::kLpRound, rng, nullptr, solver);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown mode");
}

Cover Gfwsc(const SetSystem& sys, const FairnessSpec& spec, Rng& rng,
            GfwscMode mode, const LpSolver& solver) {
  spec.CheckAgainst(sys);
  if (mode == GfwscMode::kExhaustive) return GreedyWeightedAllPick(sys, spec);
  return EffWfsc(sys, spec, rng, solver);
}

EpsilonSpec EpsilonSpec::Make(FairnessSpec base, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "epsilon must lie strictly inside (0, 1)");
  }
  return EpsilonSpec{std::move(base), epsilon};
}

double GfscApproximationFactor(GfscMode mode, int n) {
  const double greedy = std::log(std::max(n, 1)) + 1.0;
  switch (mode) {
    case GfscMode::kExhaustive:
      return greedy;
    case GfscMode::kGreedySub:
      return 2.0 * greedy;
    case GfscMode::kLpSub:
      return std::numbers::e / (std::numbers::e - 1.0) * greedy;
  }
  return greedy;
}

EpsilonAudit AuditEpsilonFairness(const SetSystem& sys, const EpsilonSpec& spec,
                                  const Cover& cover, double base_factor) {
  const int k = spec.base.num_colors();
  EpsilonAudit audit;
  audit.counts.assign(k, 0);
  for (SetId s : cover.selected) {
    if (sys.colors[s] < k) ++audit.counts[sys.colors[s]];
  }
  const double total = cover.size();
  for (int h = 0; h < k; ++h) {
    const double target = spec.base.fractions()[h].ToDouble() * total;
    audit.lower.push_back((1.0 - spec.epsilon) * target);
    audit.upper.push_back((1.0 + spec.epsilon) * target);
    // A tiny slack absorbs rounding in the products above; exact fair
    // covers sit at target itself, far from either bound.
    const double slack = 1e-12 * std::max(1.0, target);
    if (audit.counts[h] < audit.lower[h] - slack ||
        audit.counts[h] > audit.upper[h] + slack) {
      audit.passed = false;
    }
  }
  audit.base_factor = base_factor;
  audit.implied_factor = (1.0 + spec.epsilon) * base_factor;
  return audit;
}

EpsilonResult EpsilonGfsc(const SetSystem& sys, const EpsilonSpec& spec,
                          GfscMode mode, Rng& rng, const LpSolver& solver) {
  EpsilonResult result;
  result.cover = Gfsc(sys, spec.base, mode, rng, solver);
  result.audit = AuditEpsilonFairness(sys, spec, result.cover,
                                      GfscApproximationFactor(mode, sys.n));
  return result;
}

}  // namespace fairsc
