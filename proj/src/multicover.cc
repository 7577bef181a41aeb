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

#include "fairsc/multicover.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "fairsc/status.h"

namespace fairsc {

void MulticoverInstance::Validate() const {
  RequireValidInstance(base);
  if (static_cast<int>(requirements.size()) != base.n) {
    throw Error(ErrorCode::kInvalidArgument,
                std::to_string(requirements.size()) + " requirements for " +
                    std::to_string(base.n) + " elements");
  }
  std::vector<int> containment(base.n, 0);
  for (const auto& set : base.sets) {
    for (ElementId e : set) ++containment[e];
  }
  for (ElementId e = 0; e < base.n; ++e) {
    if (requirements[e] < 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "requirement of element " + std::to_string(e) + " is below 1");
    }
    if (requirements[e] > containment[e]) {
      throw Error(ErrorCode::kInfeasibleRequirement,
                  "element " + std::to_string(e) + " needs " +
                      std::to_string(requirements[e]) + " sets but only " +
                      std::to_string(containment[e]) + " contain it");
    }
  }
}

MulticoverResult FairMulticoverGreedy(const MulticoverInstance& inst,
                                      const FairnessSpec& spec,
                                      MulticoverMode mode, Rng& rng,
                                      const LpSolver& solver,
                                      std::int64_t max_candidates) {
  inst.Validate();
  const SetSystem& sys = inst.base;
  spec.CheckAgainst(sys);
  const int p = static_cast<int>(spec.p());

  GreedyState state = GreedyState::Initial(sys);
  MulticoverResult result;
  result.final_counts.assign(sys.n, 0);
  result.ledger.tuple_size = p;
  std::vector<int> occurrences(sys.n, 0);
  ElementMask alive = ElementMask::Full(sys.n);

  int round = 0;
  while (alive.Any()) {
    state.uncovered = alive;
    std::vector<SetId> tuple;
    if (mode == MulticoverMode::kExhaustive) {
      const TupleChoice best = BestCoverageTuple(sys, state, alive,
                                                 spec.per_round(), max_candidates);
      if (best.coverage == 0) {
        throw Error(ErrorCode::kNoProgress,
                    "no tuple of unpicked sets touches an alive element");
      }
      tuple = best.sets;
    } else {
      const MkccSubroutine sub = mode == MulticoverMode::kMkccGreedy
                                     ? MkccSubroutine::kGreedy
                                     : MkccSubroutine::kLpRound;
      tuple = EffRoundTuple(sys, state, spec.per_round(), sub, rng, solver,
                            nullptr);
    }

    // Tuple sets ordered by (color, index) decide attribution.
    std::vector<SetId> by_color = tuple;
    std::stable_sort(by_color.begin(), by_color.end(), [&](SetId a, SetId b) {
      return sys.colors[a] < sys.colors[b];
    });
    ElementMask touched(sys.n);
    for (SetId s : tuple) touched |= state.set_masks[s];
    touched &= alive;
    const std::vector<ElementId> priced = touched.Elements();
    const double price = static_cast<double>(p) / priced.size();
    result.ledger.alive_history.push_back(alive.Count());
    for (ElementId e : priced) {
      PriceEntry entry;
      entry.element = e;
      entry.occurrence = ++occurrences[e];
      entry.price = price;
      entry.round = round;
      for (SetId s : by_color) {
        if (state.set_masks[s].Test(e)) {
          entry.attributed_set = s;
          break;
        }
      }
      result.ledger.entries.push_back(entry);
    }

    state.Commit(sys, tuple);
    result.ledger.round_sets.push_back(state.cover.rounds.back());
    for (SetId s : tuple) {
      for (ElementId e : sys.sets[s]) {
        if (++result.final_counts[e] >= inst.requirements[e]) alive.Reset(e);
      }
    }
    ++round;
  }
  state.uncovered = ElementMask(sys.n);
  result.cover = state.cover;
  return result;
}

AuditReport AuditPriceIdentity(const Cover& cover, const PriceLedger& ledger) {
  AuditReport report;
  const int rounds = static_cast<int>(ledger.round_sets.size());
  std::vector<double> per_round(rounds, 0.0);
  for (const PriceEntry& entry : ledger.entries) {
    if (entry.round < 0 || entry.round >= rounds) {
      report.passed = false;
      report.offending_round = entry.round;
      report.message = "price entry refers to unknown round";
      return report;
    }
    per_round[entry.round] += entry.price;
    report.total += entry.price;
  }
  report.expected = cover.size();
  for (int r = 0; r < rounds; ++r) {
    if (std::abs(per_round[r] - ledger.tuple_size) > kPriceIdentityTol) {
      report.passed = false;
      report.offending_round = r;
      report.message = "round " + std::to_string(r) + " prices sum to " +
                       std::to_string(per_round[r]) + ", expected " +
                       std::to_string(ledger.tuple_size);
      return report;
    }
  }
  if (std::abs(report.total - report.expected) > kPriceIdentityTol) {
    report.passed = false;
    report.message = "prices sum to " + std::to_string(report.total) +
                     " but |X| = " + std::to_string(cover.size());
  }
  return report;
}

double HarmonicNumber(int n) {
  double h = 0.0;
  for (int i = 1; i <= n; ++i) h += 1.0 / i;
  return h;
}

AuditReport AuditHarmonicBound(const MulticoverInstance& inst,
                               const FairnessSpec& spec,
                               const PriceLedger& ledger, double slack) {
  const SetSystem& sys = inst.base;
  AuditReport report;
  std::vector<double> last_price(sys.n, 0.0);
  std::vector<int> last_occurrence(sys.n, 0);
  std::map<std::pair<ElementId, int>, double> price_at_round;
  for (const PriceEntry& e : ledger.entries) {
    if (e.occurrence > last_occurrence[e.element]) {
      last_occurrence[e.element] = e.occurrence;
      last_price[e.element] = e.price;
    }
    price_at_round[{e.element, e.round}] = e.price;
  }
  std::vector<int> picked_round(sys.num_sets(), -1);
  for (int r = 0; r < static_cast<int>(ledger.round_sets.size()); ++r) {
    for (SetId s : ledger.round_sets[r]) picked_round[s] = r;
  }

  const double unit = ledger.tuple_size * HarmonicNumber(sys.n);
  report.expected = slack * unit;
  for (SetId s = 0; s < sys.num_sets(); ++s) {
    if (spec.per_round()[sys.colors[s]] == 0) continue;
    double sum = 0.0;
    for (ElementId e : sys.sets[s]) {
      if (picked_round[s] >= 0) {
        const auto it = price_at_round.find({e, picked_round[s]});
        sum += it != price_at_round.end() ? it->second : last_price[e];
      } else {
        sum += last_price[e];
      }
    }
    const double ratio = unit > 0 ? sum / unit : 0.0;
    if (ratio > report.max_ratio) {
      report.max_ratio = ratio;
      report.worst_set = s;
      report.total = sum;
    }
    if (sum > report.expected + kPriceIdentityTol && report.passed) {
      report.passed = false;
      report.message = "set " + std::to_string(s) + " carries price " +
                       std::to_string(sum) + " > " +
                       std::to_string(report.expected);
    }
  }
  return report;
}

}  // namespace fairsc
