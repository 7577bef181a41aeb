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

#include "fairsc/cover_algorithms.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "fairsc/status.h"

namespace fairsc {

GreedyState GreedyState::Initial(const SetSystem& sys) {
  GreedyState state;
  state.uncovered = ElementMask::Full(sys.n);
  state.remaining.assign(sys.num_colors(), {});
  for (SetId s = 0; s < sys.num_sets(); ++s) {
    state.remaining[sys.colors[s]].push_back(s);
  }
  state.picked.assign(sys.num_sets(), 0);
  state.cover.group_counts.assign(sys.num_colors(), 0);
  state.set_masks.reserve(sys.num_sets());
  for (const auto& set : sys.sets) {
    state.set_masks.push_back(ElementMask::Of(sys.n, set));
  }
  return state;
}

std::vector<SetId> GreedyState::RemainingSets() const {
  std::vector<SetId> out;
  for (const auto& sets : remaining) out.insert(out.end(), sets.begin(), sets.end());
  std::sort(out.begin(), out.end());
  return out;
}

int GreedyState::NewCoverage(std::span<const SetId> tuple) const {
  ElementMask acc(uncovered.universe());
  for (SetId s : tuple) acc |= set_masks[s];
  return acc.AndCount(uncovered);
}

void GreedyState::Commit(const SetSystem& sys, std::span<const SetId> tuple) {
  std::vector<SetId> sorted(tuple.begin(), tuple.end());
  std::sort(sorted.begin(), sorted.end());
  for (SetId s : sorted) {
    if (picked[s]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "set " + std::to_string(s) + " committed twice");
    }
    picked[s] = 1;
    auto& pool = remaining[sys.colors[s]];
    pool.erase(std::find(pool.begin(), pool.end(), s));
    cover.selected.push_back(s);
    ++cover.group_counts[sys.colors[s]];
    cover.total_weight += sys.weight(s);
    uncovered.Subtract(set_masks[s]);
  }
  cover.rounds.push_back(std::move(sorted));
}

namespace {

std::int64_t Binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  // Exact while below the saturation point.
  long double acc = 1;
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > static_cast<long double>(std::numeric_limits<std::int64_t>::max())) {
      return std::numeric_limits<std::int64_t>::max();
    }
    result = result * (n - r + i) / i;
  }
  return result;
}

void CheckQuotas(const SetSystem& sys,
                 const std::vector<std::vector<SetId>>& remaining,
                 std::span<const int> per_round) {
  if (static_cast<int>(per_round.size()) != sys.num_colors()) {
    throw Error(ErrorCode::kInvalidArgument,
                "per_round has " + std::to_string(per_round.size()) +
                    " entries for " + std::to_string(sys.num_colors()) +
                    " colors");
  }
  for (Color h = 0; h < sys.num_colors(); ++h) {
    if (static_cast<int>(remaining[h].size()) < per_round[h]) {
      throw Error(ErrorCode::kInsufficientColor,
                  "color " + std::to_string(h) + " has " +
                      std::to_string(remaining[h].size()) +
                      " unpicked sets, needs " + std::to_string(per_round[h]));
    }
  }
}

// Depth-first enumeration of color-respecting tuples.
class TupleSearch {
 public:
  enum class Objective { kMaxCoverage, kMinRatio };

  TupleSearch(const SetSystem& sys, const GreedyState& state,
              const ElementMask& target, std::span<const int> per_round,
              Objective objective)
      : sys_(sys), state_(state), per_round_(per_round), objective_(objective) {
    for (Color h = 0; h < sys.num_colors(); ++h) {
      if (per_round[h] > 0) active_.push_back(h);
    }
    const int depth = std::accumulate(per_round.begin(), per_round.end(), 0);
    stack_.assign(depth + 1, ElementMask(sys.n));
    masked_.resize(sys.num_sets());
    for (Color h : active_) {
      for (SetId s : state.remaining[h]) {
        masked_[s] = state.set_masks[s];
        masked_[s] &= target;
      }
    }
  }

  std::optional<TupleChoice> Run() {
    current_.clear();
    Recurse(0, 0, 0, 0.0);
    return best_;
  }

 private:
  void Recurse(size_t color_index, size_t start, int depth, double weight) {
    if (color_index == active_.size()) {
      Leaf(depth, weight);
      return;
    }
    const Color h = active_[color_index];
    const auto& pool = state_.remaining[h];
    const int chosen_here = CountChosen(h);
    if (chosen_here == per_round_[h]) {
      Recurse(color_index + 1, 0, depth, weight);
      return;
    }
    const size_t still_needed = per_round_[h] - chosen_here;
    for (size_t i = start; i + still_needed <= pool.size(); ++i) {
      const SetId s = pool[i];
      stack_[depth + 1] = stack_[depth];
      stack_[depth + 1] |= masked_[s];
      current_.push_back(s);
      Recurse(color_index, i + 1, depth + 1, weight + sys_.weight(s));
      current_.pop_back();
    }
  }

  int CountChosen(Color h) const {
    int c = 0;
    for (SetId s : current_) c += sys_.colors[s] == h;
    return c;
  }

  void Leaf(int depth, double weight) {
    const int coverage = stack_[depth].Count();
    if (objective_ == Objective::kMinRatio && coverage == 0) return;
    if (best_) {
      int cmp;  // < 0 means the candidate is better
      if (objective_ == Objective::kMaxCoverage) {
        cmp = best_->coverage - coverage;
      } else {
        const double lhs = weight * best_->coverage;
        const double rhs = best_->weight * coverage;
        cmp = lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
      }
      if (cmp > 0) return;
      if (cmp == 0) {
        std::vector<SetId> sorted(current_);
        std::sort(sorted.begin(), sorted.end());
        if (!(sorted < best_->sets)) return;
        best_->sets = std::move(sorted);
        best_->coverage = coverage;
        best_->weight = weight;
        return;
      }
    }
    TupleChoice choice;
    choice.sets = current_;
    std::sort(choice.sets.begin(), choice.sets.end());
    choice.coverage = coverage;
    choice.weight = weight;
    best_ = std::move(choice);
  }

  const SetSystem& sys_;
  const GreedyState& state_;
  std::span<const int> per_round_;
  Objective objective_;
  std::vector<Color> active_;
  std::vector<ElementMask> stack_;
  std::vector<ElementMask> masked_;
  std::vector<SetId> current_;
  std::optional<TupleChoice> best_;
};

void CheckBudget(const GreedyState& state, std::span<const int> per_round,
                 std::int64_t max_candidates) {
  const std::int64_t candidates = CountTupleCandidates(state.remaining, per_round);
  if (candidates > max_candidates) {
    throw Error(ErrorCode::kBudgetExceeded,
                std::to_string(candidates) + " tuple candidates per round exceed " +
                    std::to_string(max_candidates) +
                    "; use an eff-* algorithm instead");
  }
}

std::vector<std::vector<SetId>> Incidence(const SetSystem& sys) {
  std::vector<std::vector<SetId>> incidence(sys.n);
  for (SetId s = 0; s < sys.num_sets(); ++s) {
    for (ElementId e : sys.sets[s]) incidence[e].push_back(s);
  }
  return incidence;
}

}  // namespace

std::int64_t CountTupleCandidates(
    const std::vector<std::vector<SetId>>& remaining,
    std::span<const int> per_round) {
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  std::int64_t total = 1;
  for (size_t h = 0; h < per_round.size() && h < remaining.size(); ++h) {
    const std::int64_t c = Binomial(remaining[h].size(), per_round[h]);
    if (c == 0) return 0;
    if (total > kMax / c) return kMax;
    total *= c;
  }
  return total;
}

std::int64_t CountTupleCandidates(const SetSystem& sys,
                                  std::span<const int> per_round) {
  std::vector<std::vector<SetId>> remaining(sys.num_colors());
  for (SetId s = 0; s < sys.num_sets(); ++s) remaining[sys.colors[s]].push_back(s);
  return CountTupleCandidates(remaining, per_round);
}

TupleChoice BestCoverageTuple(const SetSystem& sys, const GreedyState& state,
                              const ElementMask& target,
                              std::span<const int> per_round,
                              std::int64_t max_candidates) {
  CheckQuotas(sys, state.remaining, per_round);
  CheckBudget(state, per_round, max_candidates);
  TupleSearch search(sys, state, target, per_round,
                     TupleSearch::Objective::kMaxCoverage);
  return *search.Run();
}

std::optional<TupleChoice> BestRatioTuple(const SetSystem& sys,
                                          const GreedyState& state,
                                          std::span<const int> per_round,
                                          std::int64_t max_candidates) {
  CheckQuotas(sys, state.remaining, per_round);
  CheckBudget(state, per_round, max_candidates);
  TupleSearch search(sys, state, state.uncovered, per_round,
                     TupleSearch::Objective::kMinRatio);
  return search.Run();
}

Cover GreedySetCover(const SetSystem& sys) {
  RequireValidInstance(sys);
  const auto incidence = Incidence(sys);
  std::vector<int> fresh(sys.num_sets());
  for (SetId s = 0; s < sys.num_sets(); ++s) fresh[s] = sys.sets[s].size();
  std::vector<char> covered(sys.n, 0);
  int uncovered = sys.n;
  Cover cover;
  while (uncovered > 0) {
    const SetId best = static_cast<SetId>(
        std::max_element(fresh.begin(), fresh.end()) - fresh.begin());
    if (fresh[best] == 0) break;
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

int FairPaddingTarget(const FairnessSpec& spec, std::span<const int> counts) {
  std::int64_t rounds = 0;
  for (int h = 0; h < spec.num_colors(); ++h) {
    const int count = h < static_cast<int>(counts.size()) ? counts[h] : 0;
    const int ph = spec.per_round()[h];
    if (ph == 0) {
      if (count > 0) {
        throw Error(ErrorCode::kZeroFractionViolated,
                    "group " + std::to_string(h) +
                        " has f = 0 but the unfair cover uses it");
      }
      continue;
    }
    rounds = std::max<std::int64_t>(rounds, (count + ph - 1) / ph);
  }
  return static_cast<int>(rounds * spec.p());
}

Cover NaiveFsc(const SetSystem& sys, const FairnessSpec& spec) {
  spec.CheckAgainst(sys);
  Cover cover = GreedySetCover(sys);
  const int target = FairPaddingTarget(spec, cover.group_counts);
  std::vector<char> picked(sys.num_sets(), 0);
  for (SetId s : cover.selected) picked[s] = 1;
  std::vector<SetId> padding;
  for (Color h = 0; h < sys.num_colors(); ++h) {
    const int want = static_cast<int>(
        static_cast<std::int64_t>(target) * spec.per_round()[h] / spec.p());
    int need = want - cover.group_counts[h];
    for (SetId s = 0; s < sys.num_sets() && need > 0; ++s) {
      if (sys.colors[s] == h && !picked[s]) {
        padding.push_back(s);
        picked[s] = 1;
        --need;
      }
    }
    if (need > 0) {
      throw Error(ErrorCode::kInsufficientColor,
                  "color " + std::to_string(h) + " lacks " +
                      std::to_string(need) + " unpicked sets for padding");
    }
  }
  if (!padding.empty()) {
    std::sort(padding.begin(), padding.end());
    cover.selected.insert(cover.selected.end(), padding.begin(), padding.end());
    cover.rounds.push_back(padding);
  }
  RefreshCover(sys, cover);
  return cover;
}

Cover GreedyAllPick(const SetSystem& sys, const FairnessSpec& spec,
                    const AllPickOptions& options) {
  RequireValidInstance(sys);
  spec.CheckAgainst(sys);
  GreedyState state = GreedyState::Initial(sys);
  while (state.uncovered.Any()) {
    const TupleChoice best =
        BestCoverageTuple(sys, state, state.uncovered, spec.per_round(),
                          options.max_candidates);
    if (best.coverage == 0) {
      throw Error(ErrorCode::kNoProgress,
                  "no tuple of unpicked sets covers a remaining element");
    }
    state.Commit(sys, best.sets);
  }
  return state.cover;
}

std::vector<SetId> MkccGreedy(const SetSystem& sys, const GreedyState& state,
                              std::span<const int> per_round) {
  CheckQuotas(sys, state.remaining, per_round);
  const int needed = std::accumulate(per_round.begin(), per_round.end(), 0);
  ElementMask working = state.uncovered;
  std::vector<int> fresh(sys.num_sets(), -1);  // -1: not a candidate
  for (Color h = 0; h < sys.num_colors(); ++h) {
    if (per_round[h] == 0) continue;
    for (SetId s : state.remaining[h]) {
      fresh[s] = state.set_masks[s].AndCount(working);
    }
  }
  std::vector<int> taken(sys.num_colors(), 0);
  std::vector<char> chosen(sys.num_sets(), 0);
  std::vector<SetId> tuple;
  while (static_cast<int>(tuple.size()) < needed && working.Any()) {
    SetId best = -1;
    for (SetId s = 0; s < sys.num_sets(); ++s) {
      if (fresh[s] > (best < 0 ? -1 : fresh[best])) best = s;
    }
    if (best < 0) break;
    const Color c = sys.colors[best];
    if (taken[c] == per_round[c]) {
      fresh[best] = -1;  // discarded: its color is full
      continue;
    }
    fresh[best] = -1;
    chosen[best] = 1;
    ++taken[c];
    tuple.push_back(best);
    for (ElementId e : sys.sets[best]) {
      if (!working.Test(e)) continue;
      working.Reset(e);
      for (SetId t = 0; t < sys.num_sets(); ++t) {
        if (fresh[t] > 0 && state.set_masks[t].Test(e)) --fresh[t];
      }
    }
  }
  for (Color h = 0; h < sys.num_colors(); ++h) {
    for (SetId s : state.remaining[h]) {
      if (taken[h] == per_round[h]) break;
      if (!chosen[s]) {
        chosen[s] = 1;
        ++taken[h];
        tuple.push_back(s);
      }
    }
  }
  std::sort(tuple.begin(), tuple.end());
  return tuple;
}

bool RoundingDistribution::Integral() const {
  for (const auto& draw : colors) {
    for (double m : draw.mass) {
      if (std::abs(m) > 1e-9 && std::abs(m - 1.0) > 1e-9) return false;
    }
  }
  return true;
}

RoundingDistribution MakeRoundingDistribution(const SetSystem& sys,
                                              const MkccLp& lp,
                                              const LpSolution& solution,
                                              std::span<const int> per_round) {
  if (solution.status != LpStatus::kOptimal) {
    throw Error(ErrorCode::kNumericalFailure,
                "rounding needs an optimal LP solution");
  }
  RoundingDistribution dist;
  for (Color h = 0; h < static_cast<Color>(per_round.size()); ++h) {
    if (per_round[h] == 0) continue;
    RoundingDistribution::ColorDraw draw;
    draw.color = h;
    draw.quota = per_round[h];
    double sum = 0.0;
    for (int i = 0; i < lp.num_set_vars(); ++i) {
      if (sys.colors[lp.set_ids[i]] != h) continue;
      double x = std::clamp(solution.values[i], 0.0, 1.0);
      if (x < 1e-12) x = 0.0;
      draw.sets.push_back(lp.set_ids[i]);
      draw.mass.push_back(x);
      sum += x;
    }
    if (std::abs(sum - draw.quota) > 1e-6 || sum <= 0.0) {
      throw Error(ErrorCode::kNumericalFailure,
                  "color " + std::to_string(h) + " LP mass " +
                      std::to_string(sum) + " drifts from quota " +
                      std::to_string(draw.quota));
    }
    for (double& m : draw.mass) m = std::min(1.0, m * draw.quota / sum);
    dist.colors.push_back(std::move(draw));
  }
  return dist;
}

std::vector<SetId> SampleTuple(const RoundingDistribution& dist, Rng& rng) {
  std::vector<SetId> tuple;
  for (const auto& draw : dist.colors) {
    double total = 0.0;
    for (double m : draw.mass) total += m;
    auto categorical = [&]() -> size_t {
      const double u = UniformUnit(rng) * total;
      double acc = 0.0;
      size_t last_positive = 0;
      for (size_t i = 0; i < draw.mass.size(); ++i) {
        if (draw.mass[i] <= 0.0) continue;
        acc += draw.mass[i];
        last_positive = i;
        if (u < acc) return i;
      }
      return last_positive;
    };
    std::vector<char> taken(draw.sets.size(), 0);
    int distinct = 0;
    for (int t = 0; t < draw.quota; ++t) {
      const size_t i = categorical();
      if (!taken[i]) {
        taken[i] = 1;
        ++distinct;
      }
    }
    if (distinct < draw.quota) {
      std::vector<size_t> order(draw.sets.size());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return draw.mass[a] > draw.mass[b];
      });
      for (size_t i : order) {
        if (distinct == draw.quota) break;
        if (!taken[i]) {
          taken[i] = 1;
          ++distinct;
        }
      }
    }
    for (size_t i = 0; i < draw.sets.size(); ++i) {
      if (taken[i]) tuple.push_back(draw.sets[i]);
    }
  }
  std::sort(tuple.begin(), tuple.end());
  return tuple;
}

std::vector<SetId> MkccLpRound(const SetSystem& sys, const GreedyState& state,
                               std::span<const int> per_round, Rng& rng,
                               const LpSolver& solver) {
  CheckQuotas(sys, state.remaining, per_round);
  const MkccLp lp = BuildMkccLp(sys, state.RemainingSets(),
                                state.uncovered.Elements(), per_round);
  const LpSolution solution = solver.Solve(lp.lp);
  return SampleTuple(MakeRoundingDistribution(sys, lp, solution, per_round), rng);
}

std::vector<SetId> EffRoundTuple(const SetSystem& sys, const GreedyState& state,
                                 std::span<const int> per_round,
                                 MkccSubroutine subroutine, Rng& rng,
                                 const LpSolver& solver,
                                 EffFscStats::Round* round_stats) {
  EffFscStats::Round local;
  EffFscStats::Round& stats = round_stats ? *round_stats : local;
  std::vector<SetId> tuple;
  if (subroutine == MkccSubroutine::kLpRound) {
    CheckQuotas(sys, state.remaining, per_round);
    const MkccLp lp = BuildMkccLp(sys, state.RemainingSets(),
                                  state.uncovered.Elements(), per_round);
    const LpSolution solution = solver.Solve(lp.lp);
    const RoundingDistribution dist =
        MakeRoundingDistribution(sys, lp, solution, per_round);
    stats.lp_integral = dist.Integral();
    tuple = SampleTuple(dist, rng);
    while (state.NewCoverage(tuple) == 0 &&
           stats.resamples < kZeroProgressResamples) {
      ++stats.resamples;
      tuple = SampleTuple(dist, rng);
    }
    if (state.NewCoverage(tuple) == 0) {
      stats.fell_back_to_greedy = true;
      tuple = MkccGreedy(sys, state, per_round);
    }
  } else {
    tuple = MkccGreedy(sys, state, per_round);
  }
  if (state.NewCoverage(tuple) == 0) {
    throw Error(ErrorCode::kNoProgress,
                "round tuple covers no remaining element");
  }
  return tuple;
}

Cover EffFsc(const SetSystem& sys, const FairnessSpec& spec,
             MkccSubroutine subroutine, Rng& rng, EffFscStats* stats,
             const LpSolver& solver) {
  RequireValidInstance(sys);
  spec.CheckAgainst(sys);
  GreedyState state = GreedyState::Initial(sys);
  while (state.uncovered.Any()) {
    EffFscStats::Round round;
    const std::vector<SetId> tuple = EffRoundTuple(
        sys, state, spec.per_round(), subroutine, rng, solver, &round);
    if (stats) stats->rounds.push_back(round);
    state.Commit(sys, tuple);
  }
  return state.cover;
}

}  // namespace fairsc
