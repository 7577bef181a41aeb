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

// Exact brute-force solvers for small instances. They share no code with the
// approximation algorithms so tests can use them as ground truth.

#ifndef FAIRSC_ORACLES_H_
#define FAIRSC_ORACLES_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fairsc/instance.h"
#include "fairsc/multicover.h"

namespace fairsc {

inline constexpr int kMaxOracleSets = 22;
inline constexpr int kMaxMulticoverOracleSets = 20;
inline constexpr std::int64_t kMaxOracleTuples = 10'000'000;

// Minimum-cardinality cover, lexicographically smallest among minima.
// Throws kBudgetExceeded when the family has more than kMaxOracleSets sets.
Cover OptSetCover(const SetSystem& sys);

// Minimum-size (or minimum-weight when `weighted`) exactly fair cover;
// nullopt when none exists.
std::optional<Cover> OptFairCover(const SetSystem& sys,
                                  const FairnessSpec& spec, bool weighted);

struct MkccOptimum {
  std::vector<SetId> tuple;  // sorted; empty when no tuple qualifies
  int coverage = 0;
  double weight = 0.0;
  // Coverage, or weight / coverage in ratio mode (+inf when empty).
  double value = 0.0;
};

// Best tuple of per_round[h] sets of each color drawn from `remaining`, by
// coverage of `uncovered` or, with `weighted_ratio`, by the smallest
// weight / coverage among tuples covering something. Throws
// kBudgetExceeded above kMaxOracleTuples candidates and kInsufficientColor
// when a color has too few remaining sets.
MkccOptimum OptMkcc(const SetSystem& sys, std::span<const ElementId> uncovered,
                    std::span<const SetId> remaining,
                    std::span<const int> per_round, bool weighted_ratio);

// Minimum fair selection covering every element j at least r_j times.
std::optional<Cover> OptFairMulticover(const MulticoverInstance& inst,
                                       const FairnessSpec& spec);

}  // namespace fairsc

#endif  // FAIRSC_ORACLES_H_
