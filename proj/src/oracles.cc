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

#include "fairsc/oracles.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <string>

#include "fairsc/status.h"

namespace fairsc {
namespace {

using Words = std::vector<std::uint64_t>;

Words MaskOf(int n, std::span<const ElementId> elements) {
  Words w((n + 63) / 64, 0);
  for (ElementId e : elements) w[e >> 6] |= std::uint64_t{1} << (e & 63);
  return w;
}

bool IsFull(const Words& w, int n) {
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    const int bits = std::min(64, n - 64 * i);
    const std::uint64_t want =
        bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
    if (w[i] != want) return false;
  }
  return true;
}

void RequireBudget(const SetSystem& sys, int limit) {
  if (sys.num_sets() > limit) {
    throw Error(ErrorCode::kBudgetExceeded,
                "oracle enumerates at most " + std::to_string(limit) +
                    " sets, got " + std::to_string(sys.num_sets()));
  }
}

Cover MakeCover(const SetSystem& sys, std::vector<SetId> selected) {
  std::sort(selected.begin(), selected.end());
  Cover cover;
  cover.selected = selected;
  cover.rounds.push_back(std::move(selected));
  RefreshCover(sys, cover);
  return cover;
}

// Enumerates, for every multiple g of the per-round quotas, the selections
// with exactly g * per_round[h] sets of color h. `accept` decides whether a
// selection is feasible. Returns the best feasible selection.
std::optional<std::vector<SetId>> SearchFair(
    const SetSystem& sys, const FairnessSpec& spec, bool weighted,
    const std::function<bool(const std::vector<SetId>&)>& accept) {
  if (spec.num_colors() != sys.num_colors()) {
    throw Error(ErrorCode::kInvalidArgument,
                "spec has " + std::to_string(spec.num_colors()) +
                    " groups, instance has " +
                    std::to_string(sys.num_colors()));
  }
  const int k = sys.num_colors();
  std::vector<std::vector<SetId>> by_color(k);
  for (SetId s = 0; s < sys.num_sets(); ++s) by_color[sys.colors[s]].push_back(s);
  const auto& quota = spec.per_round();

  int max_rounds = std::numeric_limits<int>::max();
  for (int h = 0; h < k; ++h) {
    if (quota[h] > 0) {
      max_rounds = std::min(max_rounds,
                            static_cast<int>(by_color[h].size()) / quota[h]);
    }
  }
  if (max_rounds == std::numeric_limits<int>::max()) max_rounds = 0;

  std::optional<std::vector<SetId>> best;
  double best_weight = std::numeric_limits<double>::infinity();
  std::vector<SetId> chosen;
  for (int g = 1; g <= max_rounds; ++g) {
    // Per color h, choose g * quota[h] sets; colors in ascending order.
    std::function<void(int, int, int, double)> rec = [&](int h, int start,
                                                         int left,
                                                         double weight) {
      if (weighted && weight >= best_weight) return;
      if (!weighted && best) return;
      if (h == k) {
        if (accept(chosen)) {
          best = chosen;
          best_weight = weight;
        }
        return;
      }
      if (left == 0) {
        const int next_left = h + 1 < k ? g * quota[h + 1] : 0;
        rec(h + 1, 0, next_left, weight);
        return;
      }
      const auto& pool = by_color[h];
      for (int i = start; i + left <= static_cast<int>(pool.size()); ++i) {
        chosen.push_back(pool[i]);
        rec(h, i + 1, left - 1, weight + sys.weight(pool[i]));
        chosen.pop_back();
      }
    };
    rec(0, 0, k > 0 ? g * quota[0] : 0, 0.0);
    if (best && !weighted) break;
  }
  return best;
}

}  // namespace

Cover OptSetCover(const SetSystem& sys) {
  RequireBudget(sys, kMaxOracleSets);
  const int mu = sys.num_sets();
  std::vector<Words> masks;
  for (const auto& set : sys.sets) masks.push_back(MaskOf(sys.n, set));
  if (sys.n == 0) return MakeCover(sys, {});

  // For each size t, the first cover met in lexicographic order of index
  // combinations is the lexicographically smallest one of that size.
  std::vector<SetId> chosen;
  std::vector<Words> unions(mu + 1, Words((sys.n + 63) / 64, 0));
  std::function<bool(int, int, int)> rec = [&](int depth, int start, int t) {
    if (depth == t) return IsFull(unions[depth], sys.n);
    for (int s = start; s + (t - depth) <= mu; ++s) {
      for (size_t i = 0; i < unions[depth].size(); ++i) {
        unions[depth + 1][i] = unions[depth][i] | masks[s][i];
      }
      chosen.push_back(s);
      if (rec(depth + 1, s + 1, t)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (int t = 1; t <= mu; ++t) {
    if (rec(0, 0, t)) return MakeCover(sys, chosen);
  }
  throw Error(ErrorCode::kInvalidArgument, "the family does not cover U");
}

std::optional<Cover> OptFairCover(const SetSystem& sys,
                                  const FairnessSpec& spec, bool weighted) {
  RequireBudget(sys, kMaxOracleSets);
  std::vector<Words> masks;
  for (const auto& set : sys.sets) masks.push_back(MaskOf(sys.n, set));
  const auto covers = [&](const std::vector<SetId>& chosen) {
    Words u((sys.n + 63) / 64, 0);
    for (SetId s : chosen) {
      for (size_t i = 0; i < u.size(); ++i) u[i] |= masks[s][i];
    }
    return IsFull(u, sys.n);
  };
  const auto best = SearchFair(sys, spec, weighted, covers);
  if (!best) return std::nullopt;
  return MakeCover(sys, *best);
}

MkccOptimum OptMkcc(const SetSystem& sys, std::span<const ElementId> uncovered,
                    std::span<const SetId> remaining,
                    std::span<const int> per_round, bool weighted_ratio) {
  const int k = static_cast<int>(per_round.size());
  std::vector<std::vector<SetId>> by_color(k);
  for (SetId s : remaining) {
    if (sys.colors[s] < k) by_color[sys.colors[s]].push_back(s);
  }
  double candidates = 1.0;
  for (int h = 0; h < k; ++h) {
    std::sort(by_color[h].begin(), by_color[h].end());
    const int m = static_cast<int>(by_color[h].size());
    if (m < per_round[h]) {
      throw Error(ErrorCode::kInsufficientColor,
                  "color " + std::to_string(h) + " has " + std::to_string(m) +
                      " remaining sets, needs " + std::to_string(per_round[h]));
    }
    double c = 1.0;
    for (int i = 0; i < per_round[h]; ++i) c = c * (m - i) / (i + 1);
    candidates *= c;
  }
  if (candidates > static_cast<double>(kMaxOracleTuples)) {
    throw Error(ErrorCode::kBudgetExceeded,
                "too many tuples for the exhaustive oracle");
  }

  std::vector<char> target(sys.n, 0);
  for (ElementId e : uncovered) target[e] = 1;
  MkccOptimum best;
  best.value = weighted_ratio ? std::numeric_limits<double>::infinity() : -1.0;
  std::vector<SetId> chosen;
  std::vector<int> hits(sys.n, 0);
  int covered = 0;
  std::function<void(int, int, int, double)> rec = [&](int h, int start,
                                                       int left, double w) {
    if (h == k) {
      std::vector<SetId> tuple = chosen;
      std::sort(tuple.begin(), tuple.end());
      double value;
      if (weighted_ratio) {
        if (covered == 0) return;
        value = w / covered;
        const bool better =
            value < best.value || (value == best.value && tuple < best.tuple);
        if (!better) return;
      } else {
        value = covered;
        const bool better =
            value > best.value || (value == best.value && tuple < best.tuple);
        if (!better) return;
      }
      best.tuple = std::move(tuple);
      best.coverage = covered;
      best.weight = w;
      best.value = value;
      return;
    }
    if (left == 0) {
      rec(h + 1, 0, h + 1 < k ? per_round[h + 1] : 0, w);
      return;
    }
    const auto& pool = by_color[h];
    for (int i = start; i + left <= static_cast<int>(pool.size()); ++i) {
      const SetId s = pool[i];
      for (ElementId e : sys.sets[s]) {
        if (target[e] && hits[e]++ == 0) ++covered;
      }
      chosen.push_back(s);
      rec(h, i + 1, left - 1, w + sys.weight(s));
      chosen.pop_back();
      for (ElementId e : sys.sets[s]) {
        if (target[e] && --hits[e] == 0) --covered;
      }
    }
  };
  rec(0, 0, k > 0 ? per_round[0] : 0, 0.0);
  if (!weighted_ratio && best.value < 0) best.value = 0;
  return best;
}

std::optional<Cover> OptFairMulticover(const MulticoverInstance& inst,
                                       const FairnessSpec& spec) {
  const SetSystem& sys = inst.base;
  RequireBudget(sys, kMaxMulticoverOracleSets);
  const auto satisfies = [&](const std::vector<SetId>& chosen) {
    std::vector<int> counts(sys.n, 0);
    for (SetId s : chosen) {
      for (ElementId e : sys.sets[s]) ++counts[e];
    }
    for (ElementId e = 0; e < sys.n; ++e) {
      if (counts[e] < inst.requirements[e]) return false;
    }
    return true;
  };
  const auto best = SearchFair(sys, spec, false, satisfies);
  if (!best) return std::nullopt;
  return MakeCover(sys, *best);
}

}  // namespace fairsc
