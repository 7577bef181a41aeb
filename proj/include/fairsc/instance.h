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

// Instance and solution model shared by every algorithm: the colored set
// system, rational group fractions, covers and the fairness metric.

#ifndef FAIRSC_INSTANCE_H_
#define FAIRSC_INSTANCE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fairsc {

using SetId = int;
using ElementId = int;
using Color = int;

// A universe of `n` elements 0..n-1 and a family of colored, optionally
// weighted sets. Sets are kept sorted and duplicate-free.
struct SetSystem {
  int n = 0;
  std::vector<std::vector<ElementId>> sets;
  std::vector<Color> colors;
  std::optional<std::vector<double>> weights;

  int num_sets() const { return static_cast<int>(sets.size()); }
  // Number of groups, i.e. 1 + the largest color (0 for an empty family).
  int num_colors() const;
  double weight(SetId s) const { return weights ? (*weights)[s] : 1.0; }
  bool weighted() const { return weights.has_value(); }
  // Sets of color `h`, ascending.
  std::vector<SetId> SetsOfColor(Color h) const;
  // m_h for every color.
  std::vector<int> ColorSizes() const;

  bool operator==(const SetSystem&) const = default;
};

struct Violation {
  enum class Kind {
    kElementOutOfRange,
    kUnsortedOrDuplicate,
    kUncoveredElement,
    kNonPositiveWeight,
    kEmptyColor,
    kBadColor,
    kSizeMismatch,
  };
  Kind kind;
  // Element, set or color index the violation refers to.
  int index = -1;
  std::string message;
};

struct ValidationOutcome {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string Summary() const;
};

// Reports every structural problem; never throws.
ValidationOutcome ValidateInstance(const SetSystem& sys);

// Throws Error(kInvalidArgument) carrying the summary when `sys` is invalid.
void RequireValidInstance(const SetSystem& sys);

// Exact non-negative rational in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational Make(std::int64_t num, std::int64_t den);
  double ToDouble() const { return static_cast<double>(num) / den; }
  bool operator==(const Rational&) const = default;
};

// Parses "a/b" or an integer literal.
Rational ParseRational(const std::string& text);
std::string ToString(const Rational& r);

// Per-group target fractions f_h with p = lcm of denominators and
// per_round[h] = f_h * p.
class FairnessSpec {
 public:
  // Throws kSumNotOne / kNegativeFraction / kInvalidArgument.
  static FairnessSpec FromFractions(std::span<const Rational> fractions);
  static FairnessSpec CountParity(int k);
  static FairnessSpec RatioParity(const SetSystem& sys);
  // Comma-separated list such as "1/3,2/3".
  static FairnessSpec Parse(const std::string& text);

  int num_colors() const { return static_cast<int>(fractions_.size()); }
  const std::vector<Rational>& fractions() const { return fractions_; }
  std::int64_t p() const { return p_; }
  const std::vector<int>& per_round() const { return per_round_; }
  bool IsCountParity() const;

  // Throws kPCapExceeded when p > number of sets and kInvalidArgument when
  // the number of fractions does not match the instance's colors.
  void CheckAgainst(const SetSystem& sys) const;

 private:
  std::vector<Rational> fractions_;
  std::int64_t p_ = 1;
  std::vector<int> per_round_;
};

// A selection of distinct sets plus the per-round tuples that produced it.
struct Cover {
  std::vector<SetId> selected;
  std::vector<int> group_counts;
  std::vector<std::vector<SetId>> rounds;
  double total_weight = 0.0;

  int size() const { return static_cast<int>(selected.size()); }
};

// Recomputes group_counts and total_weight from `selected`.
void RefreshCover(const SetSystem& sys, Cover& cover);
// True when the union of the selected sets is the whole universe.
bool CoversUniverse(const SetSystem& sys, std::span<const SetId> selected);
// True when |X ∩ S_h| = f_h |X| for every group.
bool IsExactlyFair(const Cover& cover, const FairnessSpec& spec);

struct FairnessReport {
  // R_h = |X ∩ S_h| / f_h; NaN for excluded zero-fraction groups.
  std::vector<double> per_group_ratio;
  double fairness_ratio = 1.0;
};

// Groups with f_h = 0 and no selected sets are excluded from the min/max.
// Throws kZeroFractionViolated if a zero-fraction group has selected sets.
FairnessReport ComputeFairnessReport(const SetSystem& sys,
                                     const FairnessSpec& spec,
                                     const Cover& cover);

// w_max / w_min; 1 for unweighted systems.
double Delta(const SetSystem& sys);

}  // namespace fairsc

#endif  // FAIRSC_INSTANCE_H_
