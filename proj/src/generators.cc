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

#include "fairsc/generators.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "fairsc/random.h"
#include "fairsc/status.h"

namespace fairsc {
namespace {

// Adds each element no set contains to one random set.
void RepairUnion(SetSystem& sys, Rng& rng) {
  std::vector<char> covered(sys.n, 0);
  for (const auto& set : sys.sets) {
    for (ElementId e : set) covered[e] = 1;
  }
  for (ElementId e = 0; e < sys.n; ++e) {
    if (covered[e]) continue;
    auto& set = sys.sets[UniformBelow(rng, sys.num_sets())];
    set.insert(std::upper_bound(set.begin(), set.end(), e), e);
  }
}

double Distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

}  // namespace

SetSystem GenSynthetic(const SyntheticParams& params) {
  if (params.n <= 0 || params.m_per_color <= 0 || params.k <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "n, m and k must be positive");
  }
  const double q = params.coverage.param;
  if (params.coverage.kind == CoverageDist::Kind::kUniform &&
      !(q > 0.0 && q <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "coverage p must lie in (0, 1]");
  }
  if (params.coverage.kind == CoverageDist::Kind::kZipf && !(q > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "zipf exponent must be positive");
  }
  if (params.weights.kind == WeightDist::Kind::kUniform &&
      !(params.weights.lo > 0.0 && params.weights.lo <= params.weights.hi)) {
    throw Error(ErrorCode::kInvalidArgument, "need 0 < weight lo <= hi");
  }
  Rng rng(params.seed);
  std::vector<double> prob(params.n, q);
  if (params.coverage.kind == CoverageDist::Kind::kZipf) {
    std::vector<int> rank(params.n);
    std::iota(rank.begin(), rank.end(), 1);
    for (int i = params.n - 1; i > 0; --i) {
      std::swap(rank[i], rank[UniformBelow(rng, i + 1)]);
    }
    for (int e = 0; e < params.n; ++e) prob[e] = std::pow(rank[e], -q);
  }

  SetSystem sys;
  sys.n = params.n;
  for (Color h = 0; h < params.k; ++h) {
    for (int i = 0; i < params.m_per_color; ++i) {
      std::vector<ElementId> set;
      for (ElementId e = 0; e < params.n; ++e) {
        if (UniformUnit(rng) < prob[e]) set.push_back(e);
      }
      sys.sets.push_back(std::move(set));
      sys.colors.push_back(h);
    }
  }
  RepairUnion(sys, rng);
  if (params.weights.kind == WeightDist::Kind::kUniform) {
    std::vector<double> w;
    for (SetId s = 0; s < sys.num_sets(); ++s) {
      w.push_back(params.weights.lo +
                  (params.weights.hi - params.weights.lo) * UniformUnit(rng));
    }
    sys.weights = std::move(w);
  }
  return sys;
}

SetSystem GenBiased(int n, int m_per_color, std::uint64_t seed) {
  if (n <= 0 || m_per_color <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "n and m must be positive");
  }
  constexpr double kDense = 0.3;
  constexpr double kSparse = 0.05;
  Rng rng(seed);
  SetSystem sys;
  sys.n = n;
  // Color 0 gets ceil(0.8 m) dense sets, color 1 gets ceil(0.2 m).
  const int dense0 = (4 * m_per_color + 4) / 5;
  const int dense1 = (m_per_color + 4) / 5;
  for (Color h = 0; h < 2; ++h) {
    const int dense = h == 0 ? dense0 : dense1;
    for (int i = 0; i < m_per_color; ++i) {
      const double p = i < dense ? kDense : kSparse;
      std::vector<ElementId> set;
      for (ElementId e = 0; e < n; ++e) {
        if (UniformUnit(rng) < p) set.push_back(e);
      }
      sys.sets.push_back(std::move(set));
      sys.colors.push_back(h);
    }
  }
  RepairUnion(sys, rng);
  return sys;
}

SetSystem GenGeometric(const std::vector<Point>& points, double radius) {
  if (!(radius > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "radius must be positive");
  }
  SetSystem sys;
  sys.n = static_cast<int>(points.size());
  for (const Point& c : points) {
    std::vector<ElementId> set;
    for (int j = 0; j < sys.n; ++j) {
      if (Distance(c, points[j]) <= radius) set.push_back(j);
    }
    sys.sets.push_back(std::move(set));
    sys.colors.push_back(c.group);
  }
  return sys;
}

SumOfRadiiInstance GenSumOfRadii(const std::vector<Point>& points) {
  if (points.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "need at least one point");
  }
  const int n = static_cast<int>(points.size());
  double max_dist = 0.0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      max_dist = std::max(max_dist, Distance(points[a], points[b]));
    }
  }
  SumOfRadiiInstance out;
  out.zero_radius_weight = max_dist > 0.0 ? 1e-6 * max_dist : 1e-6;
  out.sys.n = n;
  std::vector<double> weights;
  for (int c = 0; c < n; ++c) {
    std::vector<double> radii = {0.0};
    for (int j = 0; j < n; ++j) {
      if (j != c) radii.push_back(Distance(points[c], points[j]));
    }
    std::sort(radii.begin(), radii.end());
    radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
    for (double r : radii) {
      std::vector<ElementId> set;
      for (int j = 0; j < n; ++j) {
        if (Distance(points[c], points[j]) <= r) set.push_back(j);
      }
      out.sys.sets.push_back(std::move(set));
      out.sys.colors.push_back(points[c].group);
      weights.push_back(r > 0.0 ? r : out.zero_radius_weight);
      out.balls.push_back({c, r});
    }
  }
  out.sys.weights = std::move(weights);
  return out;
}

}  // namespace fairsc
