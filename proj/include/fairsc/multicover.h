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

// Fair set multicover: element j must be covered by r_j distinct selected
// sets. The greedy keeps the "alive" elements (count_j < r_j), prices every
// alive element a round touches, and the audits below check the price
// identities that bound the cover size.

#ifndef FAIRSC_MULTICOVER_H_
#define FAIRSC_MULTICOVER_H_

#include <string>
#include <vector>

#include "fairsc/cover_algorithms.h"
#include "fairsc/instance.h"
#include "fairsc/lp.h"
#include "fairsc/random.h"

namespace fairsc {

struct MulticoverInstance {
  SetSystem base;
  std::vector<int> requirements;

  // Throws kInvalidArgument for malformed input and kInfeasibleRequirement
  // when some r_j exceeds the number of sets containing j.
  void Validate() const;
};

struct PriceEntry {
  ElementId element = 0;
  // 1-based index of the round, among those that priced this element.
  int occurrence = 0;
  double price = 0.0;
  int round = 0;
  // Tuple set the element is attributed to: the lowest-color set of the
  // tuple containing it (lowest index within a color).
  SetId attributed_set = -1;
};

struct PriceLedger {
  std::vector<PriceEntry> entries;
  // |Y_i|, alive elements at the start of each round.
  std::vector<int> alive_history;
  // Sets of each round, sorted.
  std::vector<std::vector<SetId>> round_sets;
  // Sets per round (p); every round's prices sum to this.
  int tuple_size = 0;
};

enum class MulticoverMode { kExhaustive, kMkccGreedy, kMkccLp };

struct MulticoverResult {
  Cover cover;
  PriceLedger ledger;
  std::vector<int> final_counts;
};

// Each round commits the tuple covering the most alive elements. Alive
// elements in the tuple's union receive one price p / |Y_i ∩ union| each;
// their counts grow by the number of tuple sets containing them.
MulticoverResult FairMulticoverGreedy(
    const MulticoverInstance& inst, const FairnessSpec& spec,
    MulticoverMode mode, Rng& rng,
    const LpSolver& solver = DefaultLpSolver(),
    std::int64_t max_candidates = kDefaultMaxTupleCandidates);

struct AuditReport {
  bool passed = true;
  std::string message;
  // Round that broke an identity, or -1.
  int offending_round = -1;
  double total = 0.0;
  double expected = 0.0;
  // Harmonic audit: largest per-set price sum divided by p * H_n.
  double max_ratio = 0.0;
  SetId worst_set = -1;
};

inline constexpr double kPriceIdentityTol = 1e-9;

// Sum of all prices equals |X| and every round's prices sum to p.
AuditReport AuditPriceIdentity(const Cover& cover, const PriceLedger& ledger);

double HarmonicNumber(int n);

// For every set S of a positive-quota color: the sum over e in S of e's last
// price is at most slack * p * H_n. For a selected set, elements still alive
// when it was picked contribute their price from that round instead. `slack`
// is 1 for the exhaustive greedy.
AuditReport AuditHarmonicBound(const MulticoverInstance& inst,
                               const FairnessSpec& spec,
                               const PriceLedger& ledger, double slack = 1.0);

}  // namespace fairsc

#endif  // FAIRSC_MULTICOVER_H_
