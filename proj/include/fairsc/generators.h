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

// Seeded instance generators: random set systems, disk covers over colored
// points, and the ball family of the fair sum-of-radii reduction.

#ifndef FAIRSC_GENERATORS_H_
#define FAIRSC_GENERATORS_H_

#include <cstdint>
#include <vector>

#include "fairsc/instance.h"

namespace fairsc {

struct CoverageDist {
  enum class Kind { kUniform, kZipf };
  Kind kind = Kind::kUniform;
  // Inclusion probability p for kUniform, exponent s for kZipf.
  double param = 0.3;

  static CoverageDist Uniform(double p) { return {Kind::kUniform, p}; }
  static CoverageDist Zipf(double s) { return {Kind::kZipf, s}; }
};

struct WeightDist {
  enum class Kind { kNone, kUniform };
  Kind kind = Kind::kNone;
  double lo = 1.0;
  double hi = 1.0;

  static WeightDist None() { return {}; }
  static WeightDist Uniform(double lo, double hi) {
    return {Kind::kUniform, lo, hi};
  }
};

struct SyntheticParams {
  int n = 20;
  int m_per_color = 5;
  int k = 2;
  CoverageDist coverage;
  WeightDist weights;
  std::uint64_t seed = 0;
};

// Every set includes each element independently: with probability p under
// kUniform; under kZipf the elements get a random rank r and are included
// with probability r^-s. A repair pass then adds each uncovered element to
// one uniformly random set. Throws kInvalidArgument for bad parameters.
SetSystem GenSynthetic(const SyntheticParams& params);

// Two colors with m_per_color sets each. Most color-0 sets are dense and
// most color-1 sets sparse (4:1 either way), so an unconstrained greedy
// cover leans heavily on color 0.
SetSystem GenBiased(int n, int m_per_color, std::uint64_t seed);

struct Point {
  double x = 0.0;
  double y = 0.0;
  Color group = 0;
};

// One element and one set per point; set i holds every point within
// `radius` of point i (closed ball). Throws kInvalidArgument unless
// radius > 0.
SetSystem GenGeometric(const std::vector<Point>& points, double radius);

struct Ball {
  int center = 0;
  double radius = 0.0;
};

struct SumOfRadiiInstance {
  SetSystem sys;
  // balls[s] describes set s.
  std::vector<Ball> balls;
  double zero_radius_weight = 0.0;
};

// For every point e and every distinct distance d from e (including 0), the
// ball of radius d around e, weighted by d and colored by e's group.
// Zero-radius balls weigh 1e-6 times the largest pairwise distance (1e-6
// when all points coincide).
SumOfRadiiInstance GenSumOfRadii(const std::vector<Point>& points);

}  // namespace fairsc

#endif  // FAIRSC_GENERATORS_H_
