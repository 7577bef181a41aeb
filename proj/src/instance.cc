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

#include "fairsc/instance.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "fairsc/status.h"

namespace fairsc {

int SetSystem::num_colors() const {
  if (colors.empty()) return 0;
  return *std::max_element(colors.begin(), colors.end()) + 1;
}

std::vector<SetId> SetSystem::SetsOfColor(Color h) const {
  std::vector<SetId> out;
  for (SetId s = 0; s < num_sets(); ++s) {
    if (colors[s] == h) out.push_back(s);
  }
  return out;
}

std::vector<int> SetSystem::ColorSizes() const {
  std::vector<int> sizes(num_colors(), 0);
  for (Color c : colors) {
    if (c >= 0) ++sizes[c];
  }
  return sizes;
}

std::string ValidationOutcome::Summary() const {
  if (ok()) return "ok";
  std::ostringstream out;
  out << violations.size() << " violation(s)";
  const size_t shown = std::min<size_t>(violations.size(), 5);
  for (size_t i = 0; i < shown; ++i) out << "; " << violations[i].message;
  if (shown < violations.size()) out << "; ...";
  return out.str();
}

ValidationOutcome ValidateInstance(const SetSystem& sys) {
  ValidationOutcome outcome;
  auto report = [&](Violation::Kind kind, int index, std::string message) {
    outcome.violations.push_back({kind, index, std::move(message)});
  };
  if (sys.n < 0) {
    report(Violation::Kind::kSizeMismatch, -1, "negative universe size");
    return outcome;
  }
  if (sys.colors.size() != sys.sets.size()) {
    report(Violation::Kind::kSizeMismatch, -1,
           "colors has " + std::to_string(sys.colors.size()) +
               " entries for " + std::to_string(sys.sets.size()) + " sets");
    return outcome;
  }
  if (sys.weights && sys.weights->size() != sys.sets.size()) {
    report(Violation::Kind::kSizeMismatch, -1,
           "weights has " + std::to_string(sys.weights->size()) +
               " entries for " + std::to_string(sys.sets.size()) + " sets");
    return outcome;
  }

  std::vector<char> covered(sys.n, 0);
  for (SetId s = 0; s < sys.num_sets(); ++s) {
    const auto& set = sys.sets[s];
    for (size_t i = 0; i < set.size(); ++i) {
      const ElementId e = set[i];
      if (e < 0 || e >= sys.n) {
        report(Violation::Kind::kElementOutOfRange, s,
               "set " + std::to_string(s) + " contains out-of-range element " +
                   std::to_string(e));
        continue;
      }
      if (i > 0 && set[i - 1] >= e) {
        report(Violation::Kind::kUnsortedOrDuplicate, s,
               "set " + std::to_string(s) + " is not sorted and duplicate-free");
      }
      covered[e] = 1;
    }
  }
  for (ElementId e = 0; e < sys.n; ++e) {
    if (!covered[e]) {
      report(Violation::Kind::kUncoveredElement, e,
             "element " + std::to_string(e) + " uncovered");
    }
  }
  if (sys.weights) {
    for (SetId s = 0; s < sys.num_sets(); ++s) {
      const double w = (*sys.weights)[s];
      if (!(w > 0.0) || !std::isfinite(w)) {
        report(Violation::Kind::kNonPositiveWeight, s,
               "set " + std::to_string(s) + " has non-positive weight");
      }
    }
  }
  bool colors_in_range = true;
  for (SetId s = 0; s < sys.num_sets(); ++s) {
    if (sys.colors[s] < 0) {
      report(Violation::Kind::kBadColor, s,
             "set " + std::to_string(s) + " has negative color");
      colors_in_range = false;
    }
  }
  if (sys.num_sets() == 0) {
    report(Violation::Kind::kEmptyColor, 0, "no sets, so k = 0");
  } else if (colors_in_range) {
    const auto sizes = sys.ColorSizes();
    for (Color h = 0; h < static_cast<Color>(sizes.size()); ++h) {
      if (sizes[h] == 0) {
        report(Violation::Kind::kEmptyColor, h,
               "color " + std::to_string(h) + " owns no set");
      }
    }
  }
  return outcome;
}

void RequireValidInstance(const SetSystem& sys) {
  const ValidationOutcome outcome = ValidateInstance(sys);
  if (!outcome.ok()) throw Error(ErrorCode::kInvalidArgument, outcome.Summary());
}

Rational Rational::Make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num < 0) {
    throw Error(ErrorCode::kNegativeFraction,
                std::to_string(num) + "/" + std::to_string(den));
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

Rational ParseRational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    size_t used = 0;
    if (slash == std::string::npos) {
      const long long v = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return Rational::Make(v, 1);
    }
    const std::string a = text.substr(0, slash);
    const std::string b = text.substr(slash + 1);
    const long long num = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    const long long den = std::stoll(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    return Rational::Make(num, den);
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot parse fraction '" + text + "'");
  }
}

std::string ToString(const Rational& r) {
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

FairnessSpec FairnessSpec::FromFractions(std::span<const Rational> fractions) {
  if (fractions.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no fractions given");
  }
  FairnessSpec spec;
  std::int64_t lcm = 1;
  for (const Rational& f : fractions) {
    const Rational r = Rational::Make(f.num, f.den);
    spec.fractions_.push_back(r);
    lcm = std::lcm(lcm, r.den);
    if (lcm > std::numeric_limits<int>::max()) {
      throw Error(ErrorCode::kInvalidArgument, "fraction denominators too large");
    }
  }
  std::int64_t total = 0;
  for (const Rational& f : spec.fractions_) {
    const std::int64_t ph = f.num * (lcm / f.den);
    spec.per_round_.push_back(static_cast<int>(ph));
    total += ph;
  }
  if (total != lcm) {
    throw Error(ErrorCode::kSumNotOne, "fractions sum to " +
                                           std::to_string(total) + "/" +
                                           std::to_string(lcm));
  }
  spec.p_ = lcm;
  return spec;
}

FairnessSpec FairnessSpec::CountParity(int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  std::vector<Rational> fractions(k, Rational::Make(1, k));
  return FromFractions(fractions);
}

FairnessSpec FairnessSpec::RatioParity(const SetSystem& sys) {
  const auto sizes = sys.ColorSizes();
  std::vector<Rational> fractions;
  for (int m : sizes) fractions.push_back(Rational::Make(m, sys.num_sets()));
  return FromFractions(fractions);
}

FairnessSpec FairnessSpec::Parse(const std::string& text) {
  std::vector<Rational> fractions;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) fractions.push_back(ParseRational(item));
  return FromFractions(fractions);
}

bool FairnessSpec::IsCountParity() const {
  return std::all_of(per_round_.begin(), per_round_.end(),
                     [](int ph) { return ph == 1; });
}

void FairnessSpec::CheckAgainst(const SetSystem& sys) const {
  if (num_colors() != sys.num_colors()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::to_string(num_colors()) + " fractions for " +
                    std::to_string(sys.num_colors()) + " colors");
  }
  if (p_ > sys.num_sets()) {
    throw Error(ErrorCode::kPCapExceeded,
                "p = " + std::to_string(p_) + " exceeds the " +
                    std::to_string(sys.num_sets()) + " available sets");
  }
}

void RefreshCover(const SetSystem& sys, Cover& cover) {
  cover.group_counts.assign(sys.num_colors(), 0);
  cover.total_weight = 0.0;
  for (SetId s : cover.selected) {
    ++cover.group_counts[sys.colors[s]];
    cover.total_weight += sys.weight(s);
  }
}

bool CoversUniverse(const SetSystem& sys, std::span<const SetId> selected) {
  std::vector<char> covered(sys.n, 0);
  int remaining = sys.n;
  for (SetId s : selected) {
    for (ElementId e : sys.sets[s]) {
      if (!covered[e]) {
        covered[e] = 1;
        --remaining;
      }
    }
  }
  return remaining == 0;
}

bool IsExactlyFair(const Cover& cover, const FairnessSpec& spec) {
  const std::int64_t total = cover.size();
  for (int h = 0; h < spec.num_colors(); ++h) {
    const Rational& f = spec.fractions()[h];
    const std::int64_t count =
        h < static_cast<int>(cover.group_counts.size()) ? cover.group_counts[h]
                                                        : 0;
    if (count * f.den != f.num * total) return false;
  }
  return true;
}

FairnessReport ComputeFairnessReport(const SetSystem& sys,
                                     const FairnessSpec& spec,
                                     const Cover& cover) {
  std::vector<int> counts(spec.num_colors(), 0);
  for (SetId s : cover.selected) {
    const Color c = sys.colors[s];
    if (c >= spec.num_colors()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "cover uses color " + std::to_string(c) +
                      " outside the fairness spec");
    }
    ++counts[c];
  }
  FairnessReport report;
  report.per_group_ratio.assign(spec.num_colors(),
                                std::numeric_limits<double>::quiet_NaN());
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  bool any = false;
  for (int h = 0; h < spec.num_colors(); ++h) {
    const Rational& f = spec.fractions()[h];
    if (f.num == 0) {
      if (counts[h] > 0) {
        throw Error(ErrorCode::kZeroFractionViolated,
                    "group " + std::to_string(h) + " has f = 0 but " +
                        std::to_string(counts[h]) + " selected sets");
      }
      continue;
    }
    // count / (num/den), formed so fair covers give identical integers.
    const double r = static_cast<double>(counts[h] * f.den) / f.num;
    report.per_group_ratio[h] = r;
    lo = std::min(lo, r);
    hi = std::max(hi, r);
    any = true;
  }
  report.fairness_ratio = (!any || hi == 0.0) ? 1.0 : lo / hi;
  return report;
}

double Delta(const SetSystem& sys) {
  if (!sys.weights || sys.weights->empty()) return 1.0;
  const auto [lo, hi] =
      std::minmax_element(sys.weights->begin(), sys.weights->end());
  return *hi / *lo;
}

}  // namespace fairsc
