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

// Dense linear programs and a self-contained simplex solver, plus builders
// for the per-round max k-color cover relaxations.

#ifndef FAIRSC_LP_H_
#define FAIRSC_LP_H_

#include <limits>
#include <span>
#include <vector>

#include "fairsc/instance.h"

namespace fairsc {

inline constexpr double kLpFeasibilityTol = 1e-9;
inline constexpr double kLpObjectiveRelTol = 1e-7;
inline constexpr double kLpInfinity = std::numeric_limits<double>::infinity();

enum class Sense { kMinimize, kMaximize };
enum class Relation { kLessEqual, kGreaterEqual, kEqual };

struct LpConstraint {
  std::vector<double> coeffs;
  Relation relation = Relation::kLessEqual;
  double rhs = 0.0;
};

struct LpProblem {
  Sense sense = Sense::kMinimize;
  std::vector<double> objective;
  std::vector<LpConstraint> constraints;
  // Per-variable bounds; empty vectors mean the default [0, 1].
  std::vector<double> lower;
  std::vector<double> upper;

  int num_vars() const { return static_cast<int>(objective.size()); }
  double lower_bound(int j) const { return lower.empty() ? 0.0 : lower[j]; }
  double upper_bound(int j) const { return upper.empty() ? 1.0 : upper[j]; }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> values;
  double objective = 0.0;
  int pivots = 0;
};

// Solving contract. Implementations return primal-feasible values within
// kLpFeasibilityTol when optimal, and throw kDimensionMismatch for malformed
// problems or kNumericalFailure when they give up.
class LpSolver {
 public:
  virtual ~LpSolver() = default;
  virtual LpSolution Solve(const LpProblem& lp) const = 0;
};

// Dense bounded-variable two-phase primal simplex. Entering variables follow
// Dantzig's rule and switch to Bland's rule once a run of degenerate pivots
// is detected; the pivot budget is 50 * (vars + constraints) per phase.
// Lower bounds must be finite; upper bounds may be +infinity.
class SimplexSolver : public LpSolver {
 public:
  LpSolution Solve(const LpProblem& lp) const override;
};

const LpSolver& DefaultLpSolver();

// Convenience wrapper around DefaultLpSolver().
LpSolution Solve(const LpProblem& lp);

// Largest absolute constraint or bound violation of `values`.
double MaxViolation(const LpProblem& lp, std::span<const double> values);

// Relaxation of one greedy round: x per remaining set of a color with a
// positive quota, then y per uncovered element.
struct MkccLp {
  LpProblem lp;
  std::vector<SetId> set_ids;
  std::vector<ElementId> element_ids;
  int num_set_vars() const { return static_cast<int>(set_ids.size()); }
};

// maximize sum y_j s.t. sum_{color h} x_i = per_round[h],
// sum_{i: e_j in S_i} x_i >= y_j. `remaining_sets` need not be sorted.
// Throws kInsufficientColor when a color has fewer remaining sets than its
// quota.
MkccLp BuildMkccLp(const SetSystem& sys, std::span<const SetId> remaining_sets,
                   std::span<const ElementId> uncovered,
                   std::span<const int> per_round);

// Same structure with an extra sum y_j >= tau row, minimizing sum w_i x_i.
// Requires 1 <= tau <= |uncovered|.
MkccLp BuildWeightedMkccLp(const SetSystem& sys,
                           std::span<const SetId> remaining_sets,
                           std::span<const ElementId> uncovered,
                           std::span<const int> per_round, int tau);

}  // namespace fairsc

#endif  // FAIRSC_LP_H_
