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

// Weighted fair cover algorithms. Rounds minimize tuple weight per newly
// covered element, either exhaustively or through a sweep over coverage
// targets tau of a weight-minimizing LP followed by rejection sampling.

#ifndef FAIRSC_WEIGHTED_ALGORITHMS_H_
#define FAIRSC_WEIGHTED_ALGORITHMS_H_

#include <span>
#include <vector>

#include "fairsc/cover_algorithms.h"
#include "fairsc/instance.h"
#include "fairsc/lp.h"
#include "fairsc/random.h"

namespace fairsc {

// 1/2 (1 - 1/e): fraction of tau a sampled tuple must cover to be accepted.
double AcceptanceFraction();
// ceil(AcceptanceFraction() * tau), the integral acceptance threshold.
int AcceptanceThreshold(int tau);
// ceil(8 m / (1 - 1/e)) draws per tau for m uncovered elements.
int ResampleCap(int num_uncovered);

// Minimum weight per newly covered element; lowest index on ties.
Cover WeightedGreedySetCover(const SetSystem& sys);

// Weighted greedy cover padded per color with the cheapest unpicked sets.
Cover NaiveWfsc(const SetSystem& sys, const FairnessSpec& spec);

// Exhaustive tuple greedy minimizing sum of weights / new coverage.
Cover GreedyWeightedAllPick(const SetSystem& sys, const FairnessSpec& spec,
                            const AllPickOptions& options = {});

struct TauCandidate {
  int tau = 0;
  double lp_objective = 0.0;
  std::vector<SetId> tuple;
  int covered_new = 0;
  // lp_objective / covered_new.
  double ratio = 0.0;
  // Weight of the accepted tuple itself.
  double realized_weight = 0.0;
  int draws = 0;
};

struct TauSweepTrace {
  // One entry per feasible tau, in increasing tau order.
  std::vector<TauCandidate> candidates;
  // Infeasible tau that ended the sweep, or 0 if every tau was feasible.
  int first_infeasible_tau = 0;
};

// One round of the weighted max k-color cover: for tau = 1..|U-| solve the
// tau-constrained LP, sample until the tuple covers AcceptanceThreshold(tau)
// elements and keep the candidate with the smallest ratio (smallest tau on
// ties). Each tau draws from its own stream derived from one value of `rng`.
// Throws kResampleCapExceeded or kAllTauInfeasible.
TauCandidate WeightedMkccRound(const SetSystem& sys, const GreedyState& state,
                               std::span<const int> per_round, Rng& rng,
                               TauSweepTrace* trace = nullptr,
                               const LpSolver& solver = DefaultLpSolver());

// Greedy loop committing WeightedMkccRound's tuple every round.
Cover EffWfsc(const SetSystem& sys, const FairnessSpec& spec, Rng& rng,
              const LpSolver& solver = DefaultLpSolver());

}  // namespace fairsc

#endif  // FAIRSC_WEIGHTED_ALGORITHMS_H_
