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

// Small hand-built instances and helpers shared by the unit tests.

#ifndef FAIRSC_TESTS_SUPPORT_TEST_INSTANCES_H_
#define FAIRSC_TESTS_SUPPORT_TEST_INSTANCES_H_

#include <vector>

#include "fairsc/generators.h"
#include "fairsc/instance.h"
#include "fairsc/random.h"

namespace fairsc::testing {

inline SetSystem Make(int n, std::vector<std::vector<ElementId>> sets,
                      std::vector<Color> colors,
                      std::optional<std::vector<double>> weights = {}) {
  SetSystem sys;
  sys.n = n;
  sys.sets = std::move(sets);
  sys.colors = std::move(colors);
  sys.weights = std::move(weights);
  return sys;
}

// n=6: red R1={0,1,2}, R2={3,4}; blue B1={3,4,5}, B2={0,5}.
inline SetSystem SixElementFourSets() {
  return Make(6, {{0, 1, 2}, {3, 4}, {3, 4, 5}, {0, 5}}, {0, 0, 1, 1});
}

// Seeded random instance; `m` sets per color.
inline SetSystem RandomSystem(std::uint64_t seed, int n, int m, int k,
                              double p, bool weighted = false,
                              double w_hi = 8.0) {
  SyntheticParams params;
  params.n = n;
  params.m_per_color = m;
  params.k = k;
  params.coverage = CoverageDist::Uniform(p);
  if (weighted) params.weights = WeightDist::Uniform(1.0, w_hi);
  params.seed = seed;
  return GenSynthetic(params);
}

}  // namespace fairsc::testing

#endif  // FAIRSC_TESTS_SUPPORT_TEST_INSTANCES_H_
