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

// Drivers for arbitrary rational group fractions and the epsilon-unfair
// relaxation, which is answered by an exactly fair cover plus an audit.

#ifndef FAIRSC_GENERALIZED_FAIRNESS_H_
#define FAIRSC_GENERALIZED_FAIRNESS_H_

#include <vector>

#include "fairsc/instance.h"
#include "fairsc/lp.h"
#include "fairsc/random.h"

namespace fairsc {

enum class GfscMode { kExhaustive, kGreedySub, kLpSub };

// Each round picks per_round[h] sets of color h. Throws kPCapExceeded when
// p exceeds the number of sets.
Cover Gfsc(const SetSystem& sys, const FairnessSpec& spec, GfscMode mode,
           Rng& rng, const LpSolver& solver = DefaultLpSolver());

enum class GfwscMode { kExhaustive, kLpSub };

Cover Gfwsc(const SetSystem& sys, const FairnessSpec& spec, Rng& rng,
            GfwscMode mode = GfwscMode::kExhaustive,
            const LpSolver& solver = DefaultLpSolver());

struct EpsilonSpec {
  FairnessSpec base;
  double epsilon = 0.0;

  // Throws kInvalidArgument unless 0 < epsilon < 1.
  static EpsilonSpec Make(FairnessSpec base, double epsilon);
};

struct EpsilonAudit {
  bool passed = true;
  // Per group: (1-eps) f_h |X|, |X ∩ S_h|, (1+eps) f_h |X|.
  std::vector<double> lower;
  std::vector<int> counts;
  std::vector<double> upper;
  // Approximation guarantee of the fair algorithm that produced the cover.
  double base_factor = 0.0;
  // (1 + eps) * base_factor, the implied factor against the best
  // epsilon-unfair cover.
  double implied_factor = 0.0;
};

// Guarantee of the fair algorithm behind `mode` on an n-element universe.
double GfscApproximationFactor(GfscMode mode, int n);

// Checks (1-eps) f_h |X| <= |X ∩ S_h| <= (1+eps) f_h |X| for every group.
EpsilonAudit AuditEpsilonFairness(const SetSystem& sys, const EpsilonSpec& spec,
                                  const Cover& cover, double base_factor = 0.0);

struct EpsilonResult {
  Cover cover;
  EpsilonAudit audit;
};

EpsilonResult EpsilonGfsc(const SetSystem& sys, const EpsilonSpec& spec,
                          GfscMode mode, Rng& rng,
                          const LpSolver& solver = DefaultLpSolver());

}  // namespace fairsc

#endif  // FAIRSC_GENERALIZED_FAIRNESS_H_
