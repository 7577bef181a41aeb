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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "fairsc/status.h"
#include "support/test_instances.h"

namespace fairsc {
namespace {

using testing::Make;

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::kInvalidArgument;
}

Cover CoverOf(const SetSystem& sys, std::vector<SetId> selected) {
  Cover c;
  c.selected = std::move(selected);
  RefreshCover(sys, c);
  return c;
}

TEST_CASE("ValidateInstance accepts the minimal instance") {
  CHECK(ValidateInstance(Make(2, {{0}, {1}}, {0, 1})).ok());
}

TEST_CASE("ValidateInstance reports an uncovered element") {
  const auto out = ValidateInstance(Make(3, {{0}, {1}}, {0, 1}));
  REQUIRE(out.violations.size() == 1);
  CHECK(out.violations[0].kind == Violation::Kind::kUncoveredElement);
  CHECK(out.violations[0].index == 2);
}

TEST_CASE("ValidateInstance reports a zero weight") {
  const auto out =
      ValidateInstance(Make(2, {{0}, {1}}, {0, 1}, std::vector<double>{1.0, 0.0}));
  REQUIRE(out.violations.size() == 1);
  CHECK(out.violations[0].kind == Violation::Kind::kNonPositiveWeight);
  CHECK(out.violations[0].index == 1);
}

TEST_CASE("ValidateInstance reports structural problems") {
  CHECK(ValidateInstance(Make(2, {{0, 2}, {1}}, {0, 1})).violations[0].kind ==
        Violation::Kind::kElementOutOfRange);
  CHECK(ValidateInstance(Make(2, {{1, 0}}, {0})).violations[0].kind ==
        Violation::Kind::kUnsortedOrDuplicate);
  CHECK(ValidateInstance(Make(2, {{0, 1}, {1}}, {0, 2})).violations[0].kind ==
        Violation::Kind::kEmptyColor);
  CHECK(ValidateInstance(Make(1, {{0}}, {0, 1})).violations[0].kind ==
        Violation::Kind::kSizeMismatch);
  CHECK(CodeOf([] { RequireValidInstance(Make(3, {{0}}, {0})); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("FromFractions derives p and per-round quotas") {
  const auto halves = FairnessSpec::Parse("1/2,1/2");
  CHECK(halves.p() == 2);
  CHECK(halves.per_round() == std::vector<int>{1, 1});

  const auto thirds = FairnessSpec::Parse("1/3,2/3");
  CHECK(thirds.p() == 3);
  CHECK(thirds.per_round() == std::vector<int>{1, 2});

  const auto mixed = FairnessSpec::Parse("1/2,1/3,1/6");
  CHECK(mixed.p() == 6);
  CHECK(mixed.per_round() == std::vector<int>{3, 2, 1});
}

TEST_CASE("FromFractions rejects bad sums and signs") {
  CHECK(CodeOf([] { FairnessSpec::Parse("1/2,1/3"); }) == ErrorCode::kSumNotOne);
  CHECK(CodeOf([] { FairnessSpec::Parse("3/2,-1/2"); }) ==
        ErrorCode::kNegativeFraction);
  CHECK(CodeOf([] { FairnessSpec::Parse("1/0,1"); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { FairnessSpec::Parse("half,half"); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("fractions are reduced and round-trip through per_round / p") {
  for (const char* text : {"2/4,1/2", "1/3,2/3", "1/2,1/3,1/6", "1,0", "3/10,7/10"}) {
    const auto spec = FairnessSpec::Parse(text);
    int sum = 0;
    for (int h = 0; h < spec.num_colors(); ++h) {
      const Rational back = Rational::Make(spec.per_round()[h], spec.p());
      CHECK(back == spec.fractions()[h]);
      sum += spec.per_round()[h];
    }
    CHECK(sum == spec.p());
  }
  CHECK(FairnessSpec::Parse("2/4,1/2").fractions()[0] == Rational::Make(1, 2));
}

TEST_CASE("count and ratio parity constructors") {
  const auto parity = FairnessSpec::CountParity(3);
  CHECK(parity.p() == 3);
  CHECK(parity.IsCountParity());
  CHECK(parity.fractions()[1] == Rational::Make(1, 3));

  // m = (2, 4) -> (1/3, 2/3)
  const SetSystem sys = Make(2, {{0}, {1}, {0}, {1}, {0, 1}, {1}}, {0, 1, 1, 0, 1, 1});
  const auto ratio = FairnessSpec::RatioParity(sys);
  CHECK(ratio.fractions()[0] == Rational::Make(1, 3));
  CHECK(ratio.fractions()[1] == Rational::Make(2, 3));
  CHECK_FALSE(ratio.IsCountParity());
}

TEST_CASE("CheckAgainst caps p at the number of sets") {
  const SetSystem sys = Make(2, {{0}, {1}}, {0, 1});
  CHECK(CodeOf([&] { FairnessSpec::Parse("1/3,2/3").CheckAgainst(sys); }) ==
        ErrorCode::kPCapExceeded);
  CHECK(CodeOf([&] { FairnessSpec::CountParity(3).CheckAgainst(sys); }) ==
        ErrorCode::kInvalidArgument);
  FairnessSpec::CountParity(2).CheckAgainst(sys);
}

TEST_CASE("fairness report examples") {
  const SetSystem sys =
      Make(1, {{0}, {0}, {0}, {0}, {0}, {0}}, {0, 0, 0, 1, 1, 1});
  const auto parity = FairnessSpec::CountParity(2);
  CHECK(ComputeFairnessReport(sys, parity, CoverOf(sys, {0, 1, 3, 4}))
            .fairness_ratio == 1.0);
  const auto skewed = ComputeFairnessReport(sys, parity, CoverOf(sys, {0, 1, 2, 3}));
  CHECK(skewed.fairness_ratio == doctest::Approx(1.0 / 3.0));
  CHECK(skewed.per_group_ratio == std::vector<double>{6.0, 2.0});

  const auto thirds = FairnessSpec::Parse("1/3,2/3");
  const auto r = ComputeFairnessReport(sys, thirds, CoverOf(sys, {0, 3, 4}));
  CHECK(r.fairness_ratio == 1.0);
  CHECK(r.per_group_ratio == std::vector<double>{3.0, 3.0});
}

TEST_CASE("fairness ratio is 1 exactly when counts are equal under count parity") {
  const SetSystem sys = Make(1, {{0}, {0}, {0}, {0}, {0}, {0}, {0}, {0}},
                             {0, 0, 0, 0, 1, 1, 1, 1});
  const auto parity = FairnessSpec::CountParity(2);
  for (int mask = 1; mask < 256; ++mask) {
    std::vector<SetId> sel;
    for (int s = 0; s < 8; ++s) {
      if (mask >> s & 1) sel.push_back(s);
    }
    const Cover c = CoverOf(sys, sel);
    const double ratio = ComputeFairnessReport(sys, parity, c).fairness_ratio;
    CHECK(ratio >= 0.0);
    CHECK(ratio <= 1.0);
    CHECK((ratio == 1.0) == (c.group_counts[0] == c.group_counts[1]));
    CHECK(IsExactlyFair(c, parity) == (c.group_counts[0] == c.group_counts[1]));
  }
}

TEST_CASE("zero-fraction groups are excluded or rejected") {
  const SetSystem sys = Make(1, {{0}, {0}, {0}}, {0, 0, 1});
  const auto spec = FairnessSpec::Parse("1,0");
  const auto r = ComputeFairnessReport(sys, spec, CoverOf(sys, {0, 1}));
  CHECK(r.fairness_ratio == 1.0);
  CHECK(std::isnan(r.per_group_ratio[1]));
  CHECK(CodeOf([&] { ComputeFairnessReport(sys, spec, CoverOf(sys, {0, 2})); }) ==
        ErrorCode::kZeroFractionViolated);
}

TEST_CASE("Delta examples") {
  CHECK(Delta(Make(1, {{0}, {0}, {0}}, {0, 0, 0}, std::vector<double>{1, 2, 4})) ==
        4.0);
  CHECK(Delta(Make(1, {{0}, {0}}, {0, 0}, std::vector<double>{3, 3})) == 1.0);
  CHECK(Delta(Make(1, {{0}, {0}}, {0, 0}, std::vector<double>{0.5, 5})) ==
        doctest::Approx(10.0));
  CHECK(Delta(Make(1, {{0}}, {0})) == 1.0);
}

TEST_CASE("CoversUniverse and RefreshCover") {
  const SetSystem sys = testing::SixElementFourSets();
  CHECK(CoversUniverse(sys, std::vector<SetId>{0, 2}));
  CHECK_FALSE(CoversUniverse(sys, std::vector<SetId>{0, 1}));
  const Cover c = CoverOf(sys, {0, 2, 3});
  CHECK(c.group_counts == std::vector<int>{1, 2});
  CHECK(c.total_weight == 3.0);
}

}  // namespace
}  // namespace fairsc
