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

// Unweighted cover algorithms: the classic greedy set cover, greedy plus
// per-color padding, the exhaustive tuple greedy and its faster variant that
// solves each round as a max k-color cover.
//
// A "tuple" is a family of per_round[h] unpicked sets from every color h.
// All ties are broken towards the lexicographically smallest sorted tuple.

#ifndef FAIRSC_COVER_ALGORITHMS_H_
#define FAIRSC_COVER_ALGORITHMS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fairsc/element_mask.h"
#include "fairsc/instance.h"
#include "fairsc/lp.h"
#include "fairsc/random.h"

namespace fairsc {

inline constexpr std::int64_t kDefaultMaxTupleCandidates = 10'000'000;

// Mutable state of one greedy run.
struct GreedyState {
  // Elements still to cover in the current round.
  ElementMask uncovered;
  // Unpicked sets of each color, ascending.
  std::vector<std::vector<SetId>> remaining;
  std::vector<char> picked;
  Cover cover;
  std::vector<ElementMask> set_masks;

  static GreedyState Initial(const SetSystem& sys);

  std::vector<SetId> RemainingSets() const;
  int NewCoverage(std::span<const SetId> tuple) const;
  // Appends `tuple` as a round: removes its sets from `remaining` and its
  // elements from `uncovered`.
  void Commit(const SetSystem& sys, std::span<const SetId> tuple);
};

// Π_h C(|remaining_h|, per_round[h]), saturating at INT64_MAX.
std::int64_t CountTupleCandidates(
    const std::vector<std::vector<SetId>>& remaining,
    std::span<const int> per_round);
std::int64_t CountTupleCandidates(const SetSystem& sys,
                                  std::span<const int> per_round);

struct TupleChoice {
  std::vector<SetId> sets;  // sorted
  int coverage = 0;
  double weight = 0.0;
};

// Exhaustive search for the tuple covering the most of `target`.
// Throws kInsufficientColor or kBudgetExceeded.
TupleChoice BestCoverageTuple(const SetSystem& sys, const GreedyState& state,
                              const ElementMask& target,
                              std::span<const int> per_round,
                              std::int64_t max_candidates =
                                  kDefaultMaxTupleCandidates);

// Exhaustive search for the tuple minimizing weight / new coverage among
// tuples with positive coverage; nullopt when all of them cover nothing.
std::optional<TupleChoice> BestRatioTuple(
    const SetSystem& sys, const GreedyState& state,
    std::span<const int> per_round,
    std::int64_t max_candidates = kDefaultMaxTupleCandidates);

// Standard greedy set cover: most newly covered elements, lowest index wins.
Cover GreedySetCover(const SetSystem& sys);

// Greedy set cover, then the minimal per-color padding (lowest unpicked
// indices) that makes the cover fair for `spec`.
Cover NaiveFsc(const SetSystem& sys, const FairnessSpec& spec);

// Smallest cover size T, a multiple of p, with T * f_h >= counts[h] for all
// h. Throws kZeroFractionViolated when a zero-fraction group is non-empty.
int FairPaddingTarget(const FairnessSpec& spec, std::span<const int> counts);

struct AllPickOptions {
  std::int64_t max_candidates = kDefaultMaxTupleCandidates;
};

// Exhaustive tuple greedy: each round commits the tuple covering the most
// uncovered elements.
Cover GreedyAllPick(const SetSystem& sys, const FairnessSpec& spec,
                    const AllPickOptions& options = {});

// 1/2-approximate max k-color cover on `state.uncovered`: repeatedly take the
// set with the largest marginal coverage, skipping colors whose quota is
// full, then pad under-quota colors with their lowest-index remaining sets.
std::vector<SetId> MkccGreedy(const SetSystem& sys, const GreedyState& state,
                              std::span<const int> per_round);

// Per-color sampling distribution derived from an LP solution.
struct RoundingDistribution {
  struct ColorDraw {
    Color color = 0;
    int quota = 0;
    std::vector<SetId> sets;
    // x* clipped to [0, 1] and renormalized to sum to quota.
    std::vector<double> mass;
  };
  std::vector<ColorDraw> colors;

  // True when every renormalized x* is 0 or 1 (within 1e-9).
  bool Integral() const;
};

// Throws kNumericalFailure when clipping moves a color's mass by > 1e-6.
RoundingDistribution MakeRoundingDistribution(const SetSystem& sys,
                                              const MkccLp& lp,
                                              const LpSolution& solution,
                                              std::span<const int> per_round);

// Draws per_round[h] distinct sets of each color. Quota 1 is a single
// categorical draw; larger quotas draw with replacement, de-duplicate and pad
// with the unsampled sets of largest x* (lowest index on ties).
std::vector<SetId> SampleTuple(const RoundingDistribution& dist, Rng& rng);

// Solves the max k-color cover relaxation for `state` and samples a tuple.
std::vector<SetId> MkccLpRound(const SetSystem& sys, const GreedyState& state,
                               std::span<const int> per_round, Rng& rng,
                               const LpSolver& solver = DefaultLpSolver());

enum class MkccSubroutine { kGreedy, kLpRound };

inline constexpr int kZeroProgressResamples = 16;

struct EffFscStats {
  struct Round {
    bool lp_integral = false;
    int resamples = 0;
    bool fell_back_to_greedy = false;
  };
  std::vector<Round> rounds;
};

// Greedy tuple loop whose rounds are solved approximately by MkccGreedy or
// MkccLpRound. A sampled tuple with zero new coverage is redrawn up to
// kZeroProgressResamples times, then the round falls back to MkccGreedy;
// zero progress after that throws kNoProgress.
Cover EffFsc(const SetSystem& sys, const FairnessSpec& spec,
             MkccSubroutine subroutine, Rng& rng,
             EffFscStats* stats = nullptr,
             const LpSolver& solver = DefaultLpSolver());

// One round of EffFsc on an arbitrary target mask (`state.uncovered`).
// Shared with the multicover driver.
std::vector<SetId> EffRoundTuple(const SetSystem& sys, const GreedyState& state,
                                 std::span<const int> per_round,
                                 MkccSubroutine subroutine, Rng& rng,
                                 const LpSolver& solver,
                                 EffFscStats::Round* round_stats);

}  // namespace fairsc

#endif  // FAIRSC_COVER_ALGORITHMS_H_
