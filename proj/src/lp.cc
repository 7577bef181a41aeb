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

#include "fairsc/lp.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "fairsc/status.h"

namespace fairsc {
namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kReducedCostTol = 1e-9;
constexpr double kDegenerateStep = 1e-12;
constexpr int kDegenerateRunBeforeBland = 50;

void CheckShape(const LpProblem& lp) {
  const int nv = lp.num_vars();
  if (!lp.lower.empty() && static_cast<int>(lp.lower.size()) != nv) {
    throw Error(ErrorCode::kDimensionMismatch, "lower bounds length");
  }
  if (!lp.upper.empty() && static_cast<int>(lp.upper.size()) != nv) {
    throw Error(ErrorCode::kDimensionMismatch, "upper bounds length");
  }
  for (size_t i = 0; i < lp.constraints.size(); ++i) {
    if (static_cast<int>(lp.constraints[i].coeffs.size()) != nv) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "constraint " + std::to_string(i) + " has " +
                      std::to_string(lp.constraints[i].coeffs.size()) +
                      " coefficients for " + std::to_string(nv) + " variables");
    }
  }
  for (int j = 0; j < nv; ++j) {
    const double lo = lp.lower_bound(j);
    const double hi = lp.upper_bound(j);
    if (!std::isfinite(lo)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "variable " + std::to_string(j) + " needs a finite lower bound");
    }
    if (lo > hi) {
      throw Error(ErrorCode::kInvalidArgument,
                  "variable " + std::to_string(j) + " has lo > hi");
    }
  }
}

// Dense tableau over structural, slack and artificial columns. Every row
// reads  sum_j T[i][j] x_j = const  with the basic column of row i equal to
// the unit vector.
class Tableau {
 public:
  explicit Tableau(const LpProblem& lp) : lp_(lp) {
    nv_ = lp.num_vars();
    m_ = static_cast<int>(lp.constraints.size());
    for (int j = 0; j < nv_; ++j) {
      lo_.push_back(lp.lower_bound(j));
      hi_.push_back(lp.upper_bound(j));
      x_.push_back(lo_.back());
    }
    for (const LpConstraint& row : lp.constraints) {
      switch (row.relation) {
        case Relation::kLessEqual:
          lo_.push_back(0.0);
          hi_.push_back(kLpInfinity);
          break;
        case Relation::kGreaterEqual:
          lo_.push_back(-kLpInfinity);
          hi_.push_back(0.0);
          break;
        case Relation::kEqual:
          lo_.push_back(0.0);
          hi_.push_back(0.0);
          break;
      }
      x_.push_back(0.0);
    }

    // Decide which rows need an artificial column.
    std::vector<double> residual(m_);
    std::vector<int> artificial_sign(m_, 0);
    for (int i = 0; i < m_; ++i) {
      const LpConstraint& row = lp.constraints[i];
      double r = row.rhs;
      for (int j = 0; j < nv_; ++j) r -= row.coeffs[j] * x_[j];
      residual[i] = r;
      const int slack = nv_ + i;
      const bool slack_fits = r >= lo_[slack] && r <= hi_[slack];
      if (!slack_fits) artificial_sign[i] = r > 0 ? 1 : -1;
    }
    num_artificial_ = 0;
    for (int i = 0; i < m_; ++i) {
      if (artificial_sign[i] != 0) ++num_artificial_;
    }
    cols_ = nv_ + m_ + num_artificial_;
    lo_.resize(cols_, 0.0);
    hi_.resize(cols_, kLpInfinity);
    x_.resize(cols_, 0.0);
    column_row_.assign(cols_, -1);
    column_sign_.assign(cols_, 1);

    t_.assign(static_cast<size_t>(m_) * cols_, 0.0);
    basis_.assign(m_, -1);
    int next_artificial = nv_ + m_;
    for (int i = 0; i < m_; ++i) {
      const LpConstraint& row = lp.constraints[i];
      const int sign = artificial_sign[i] != 0 ? artificial_sign[i] : 1;
      double* trow = &t_[static_cast<size_t>(i) * cols_];
      for (int j = 0; j < nv_; ++j) trow[j] = sign * row.coeffs[j];
      trow[nv_ + i] = sign;
      column_row_[nv_ + i] = i;
      if (artificial_sign[i] != 0) {
        const int a = next_artificial++;
        trow[a] = 1.0;
        column_row_[a] = i;
        column_sign_[a] = sign;
        basis_[i] = a;
        x_[a] = std::abs(residual[i]);
      } else {
        basis_[i] = nv_ + i;
        x_[nv_ + i] = residual[i];
      }
    }
    is_basic_.assign(cols_, 0);
    for (int b : basis_) is_basic_[b] = 1;
  }

  int num_artificial() const { return num_artificial_; }

  // Runs simplex iterations for `cost`. Returns false on unboundedness.
  bool Optimize(const std::vector<double>& cost, int budget, int& pivots) {
    std::vector<double> d(cost);
    for (int i = 0; i < m_; ++i) {
      const double cb = cost[basis_[i]];
      if (cb == 0.0) continue;
      const double* trow = Row(i);
      for (int j = 0; j < cols_; ++j) d[j] -= cb * trow[j];
    }
    bool bland = false;
    int degenerate_run = 0;
    int used = 0;
    while (true) {
      const int entering = ChooseEntering(d, bland);
      if (entering < 0) return true;
      if (++used > budget) {
        throw Error(ErrorCode::kNumericalFailure,
                    "simplex pivot budget of " + std::to_string(budget) +
                        " exhausted");
      }
      ++pivots;
      const double dir = d[entering] < 0 ? 1.0 : -1.0;

      double step = hi_[entering] - lo_[entering];
      int leave_row = -1;
      double leave_alpha = 0.0;
      for (int i = 0; i < m_; ++i) {
        const double alpha = Row(i)[entering] * dir;
        const int b = basis_[i];
        double limit;
        if (alpha > kPivotTol) {
          if (!std::isfinite(lo_[b])) continue;
          limit = std::max(0.0, (x_[b] - lo_[b]) / alpha);
        } else if (alpha < -kPivotTol) {
          if (!std::isfinite(hi_[b])) continue;
          limit = std::max(0.0, (hi_[b] - x_[b]) / -alpha);
        } else {
          continue;
        }
        bool better = limit < step;
        if (!better && leave_row >= 0 && limit == step) {
          better = bland ? b < basis_[leave_row]
                         : std::abs(alpha) > std::abs(leave_alpha);
        }
        if (better) {
          step = limit;
          leave_row = i;
          leave_alpha = alpha;
        }
      }
      if (!std::isfinite(step)) return false;

      degenerate_run = step < kDegenerateStep ? degenerate_run + 1 : 0;
      if (degenerate_run >= kDegenerateRunBeforeBland) bland = true;

      x_[entering] += dir * step;
      for (int i = 0; i < m_; ++i) {
        const double a = Row(i)[entering];
        if (a != 0.0) x_[basis_[i]] -= a * dir * step;
      }
      if (leave_row < 0) {
        // Bound flip.
        x_[entering] = dir > 0 ? hi_[entering] : lo_[entering];
        continue;
      }
      const int leaving = basis_[leave_row];
      x_[leaving] = leave_alpha > 0 ? lo_[leaving] : hi_[leaving];
      Pivot(leave_row, entering, d);
    }
  }

  double ArtificialSum() const {
    double sum = 0.0;
    for (int j = nv_ + m_; j < cols_; ++j) sum += std::abs(x_[j]);
    return sum;
  }

  void FixArtificialsAtZero() {
    for (int j = nv_ + m_; j < cols_; ++j) {
      lo_[j] = 0.0;
      hi_[j] = 0.0;
      if (!is_basic_[j]) x_[j] = 0.0;
    }
  }

  // Recomputes basic values from the original rows to shed accumulated
  // pivoting error, then returns the structural values.
  std::vector<double> StructuralValues() {
    Refine();
    std::vector<double> values(x_.begin(), x_.begin() + nv_);
    for (int j = 0; j < nv_; ++j) {
      values[j] = std::clamp(values[j], lo_[j], hi_[j]);
    }
    return values;
  }

 private:
  double* Row(int i) { return &t_[static_cast<size_t>(i) * cols_]; }

  int ChooseEntering(const std::vector<double>& d, bool bland) const {
    int best = -1;
    double best_score = 0.0;
    for (int j = 0; j < cols_; ++j) {
      if (is_basic_[j] || lo_[j] == hi_[j]) continue;
      double score = 0.0;
      if (d[j] < -kReducedCostTol && x_[j] < hi_[j]) {
        score = -d[j];
      } else if (d[j] > kReducedCostTol && x_[j] > lo_[j]) {
        score = d[j];
      } else {
        continue;
      }
      if (bland) return j;
      if (score > best_score) {
        best_score = score;
        best = j;
      }
    }
    return best;
  }

  void Pivot(int r, int entering, std::vector<double>& d) {
    double* prow = Row(r);
    const double inv = 1.0 / prow[entering];
    for (int j = 0; j < cols_; ++j) prow[j] *= inv;
    prow[entering] = 1.0;
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      double* trow = Row(i);
      const double f = trow[entering];
      if (f == 0.0) continue;
      for (int j = 0; j < cols_; ++j) {
        if (prow[j] != 0.0) trow[j] -= f * prow[j];
      }
      trow[entering] = 0.0;
    }
    const double fd = d[entering];
    if (fd != 0.0) {
      for (int j = 0; j < cols_; ++j) {
        if (prow[j] != 0.0) d[j] -= fd * prow[j];
      }
      d[entering] = 0.0;
    }
    is_basic_[basis_[r]] = 0;
    is_basic_[entering] = 1;
    basis_[r] = entering;
  }

  // Original (unscaled) coefficient of column j in row i.
  double OriginalCoeff(int i, int j) const {
    if (j < nv_) return lp_.constraints[i].coeffs[j];
    return column_row_[j] == i ? column_sign_[j] : 0.0;
  }

  void Refine() {
    if (m_ == 0) return;
    // Solve B x_B = b - N x_N with partial pivoting.
    std::vector<double> a(static_cast<size_t>(m_) * (m_ + 1));
    auto at = [&](int i, int j) -> double& { return a[i * (m_ + 1) + j]; };
    for (int i = 0; i < m_; ++i) {
      double rhs = lp_.constraints[i].rhs;
      for (int j = 0; j < cols_; ++j) {
        if (is_basic_[j]) continue;
        const double c = OriginalCoeff(i, j);
        if (c != 0.0) rhs -= c * x_[j];
      }
      for (int k = 0; k < m_; ++k) at(i, k) = OriginalCoeff(i, basis_[k]);
      at(i, m_) = rhs;
    }
    for (int col = 0; col < m_; ++col) {
      int piv = col;
      for (int i = col + 1; i < m_; ++i) {
        if (std::abs(at(i, col)) > std::abs(at(piv, col))) piv = i;
      }
      if (std::abs(at(piv, col)) < 1e-12) return;  // keep tableau values
      if (piv != col) {
        for (int k = 0; k <= m_; ++k) std::swap(at(piv, k), at(col, k));
      }
      for (int i = col + 1; i < m_; ++i) {
        const double f = at(i, col) / at(col, col);
        if (f == 0.0) continue;
        for (int k = col; k <= m_; ++k) at(i, k) -= f * at(col, k);
      }
    }
    std::vector<double> xb(m_);
    for (int i = m_ - 1; i >= 0; --i) {
      double s = at(i, m_);
      for (int k = i + 1; k < m_; ++k) s -= at(i, k) * xb[k];
      xb[i] = s / at(i, i);
    }
    for (int k = 0; k < m_; ++k) x_[basis_[k]] = xb[k];
  }

  const LpProblem& lp_;
  int nv_ = 0;
  int m_ = 0;
  int cols_ = 0;
  int num_artificial_ = 0;
  std::vector<double> lo_, hi_, x_;
  std::vector<int> column_row_;
  std::vector<int> column_sign_;
  std::vector<double> t_;
  std::vector<int> basis_;
  std::vector<char> is_basic_;
};

}  // namespace

LpSolution SimplexSolver::Solve(const LpProblem& lp) const {
  CheckShape(lp);
  const int nv = lp.num_vars();
  const int m = static_cast<int>(lp.constraints.size());
  const int budget = 50 * std::max(1, nv + m);

  Tableau tableau(lp);
  LpSolution solution;
  const int cols = nv + m + tableau.num_artificial();

  if (tableau.num_artificial() > 0) {
    std::vector<double> phase1(cols, 0.0);
    for (int j = nv + m; j < cols; ++j) phase1[j] = 1.0;
    tableau.Optimize(phase1, budget, solution.pivots);
    double scale = 1.0;
    for (const LpConstraint& row : lp.constraints) {
      scale = std::max(scale, std::abs(row.rhs));
    }
    if (tableau.ArtificialSum() > kLpFeasibilityTol * scale) {
      solution.status = LpStatus::kInfeasible;
      return solution;
    }
    tableau.FixArtificialsAtZero();
  }

  std::vector<double> phase2(cols, 0.0);
  const double sign = lp.sense == Sense::kMaximize ? -1.0 : 1.0;
  for (int j = 0; j < nv; ++j) phase2[j] = sign * lp.objective[j];
  if (!tableau.Optimize(phase2, budget, solution.pivots)) {
    solution.status = LpStatus::kUnbounded;
    return solution;
  }

  solution.values = tableau.StructuralValues();
  solution.status = LpStatus::kOptimal;
  solution.objective = 0.0;
  for (int j = 0; j < nv; ++j) {
    solution.objective += lp.objective[j] * solution.values[j];
  }
  return solution;
}

const LpSolver& DefaultLpSolver() {
  static const SimplexSolver solver;
  return solver;
}

LpSolution Solve(const LpProblem& lp) { return DefaultLpSolver().Solve(lp); }

double MaxViolation(const LpProblem& lp, std::span<const double> values) {
  double worst = 0.0;
  for (int j = 0; j < lp.num_vars(); ++j) {
    worst = std::max(worst, lp.lower_bound(j) - values[j]);
    worst = std::max(worst, values[j] - lp.upper_bound(j));
  }
  for (const LpConstraint& row : lp.constraints) {
    double lhs = 0.0;
    for (int j = 0; j < lp.num_vars(); ++j) lhs += row.coeffs[j] * values[j];
    switch (row.relation) {
      case Relation::kLessEqual:
        worst = std::max(worst, lhs - row.rhs);
        break;
      case Relation::kGreaterEqual:
        worst = std::max(worst, row.rhs - lhs);
        break;
      case Relation::kEqual:
        worst = std::max(worst, std::abs(lhs - row.rhs));
        break;
    }
  }
  return worst;
}

namespace {

MkccLp BuildCoverageSkeleton(const SetSystem& sys,
                             std::span<const SetId> remaining_sets,
                             std::span<const ElementId> uncovered,
                             std::span<const int> per_round) {
  const int k = static_cast<int>(per_round.size());
  std::vector<int> available(k, 0);
  MkccLp out;
  std::vector<SetId> sorted(remaining_sets.begin(), remaining_sets.end());
  std::sort(sorted.begin(), sorted.end());
  for (SetId s : sorted) {
    const Color c = sys.colors[s];
    if (c >= k) {
      throw Error(ErrorCode::kInvalidArgument,
                  "set " + std::to_string(s) + " has color outside per_round");
    }
    ++available[c];
    // Zero-quota colors contribute no variables.
    if (per_round[c] > 0) out.set_ids.push_back(s);
  }
  for (Color h = 0; h < k; ++h) {
    if (available[h] < per_round[h]) {
      throw Error(ErrorCode::kInsufficientColor,
                  "color " + std::to_string(h) + " has " +
                      std::to_string(available[h]) + " remaining sets, needs " +
                      std::to_string(per_round[h]));
    }
  }
  out.element_ids.assign(uncovered.begin(), uncovered.end());
  std::sort(out.element_ids.begin(), out.element_ids.end());

  const int nx = out.num_set_vars();
  const int ny = static_cast<int>(out.element_ids.size());
  LpProblem& lp = out.lp;
  lp.objective.assign(nx + ny, 0.0);

  for (Color h = 0; h < k; ++h) {
    if (per_round[h] == 0) continue;
    LpConstraint row;
    row.coeffs.assign(nx + ny, 0.0);
    for (int i = 0; i < nx; ++i) {
      if (sys.colors[out.set_ids[i]] == h) row.coeffs[i] = 1.0;
    }
    row.relation = Relation::kEqual;
    row.rhs = per_round[h];
    lp.constraints.push_back(std::move(row));
  }
  std::vector<int> position(sys.n, -1);
  for (int j = 0; j < ny; ++j) position[out.element_ids[j]] = j;
  std::vector<LpConstraint> coverage(ny);
  for (int j = 0; j < ny; ++j) {
    coverage[j].coeffs.assign(nx + ny, 0.0);
    coverage[j].coeffs[nx + j] = -1.0;
    coverage[j].relation = Relation::kGreaterEqual;
    coverage[j].rhs = 0.0;
  }
  for (int i = 0; i < nx; ++i) {
    for (ElementId e : sys.sets[out.set_ids[i]]) {
      if (position[e] >= 0) coverage[position[e]].coeffs[i] = 1.0;
    }
  }
  for (auto& row : coverage) lp.constraints.push_back(std::move(row));
  return out;
}

}  // namespace

MkccLp BuildMkccLp(const SetSystem& sys, std::span<const SetId> remaining_sets,
                   std::span<const ElementId> uncovered,
                   std::span<const int> per_round) {
  MkccLp out = BuildCoverageSkeleton(sys, remaining_sets, uncovered, per_round);
  out.lp.sense = Sense::kMaximize;
  for (size_t j = 0; j < out.element_ids.size(); ++j) {
    out.lp.objective[out.num_set_vars() + j] = 1.0;
  }
  return out;
}

MkccLp BuildWeightedMkccLp(const SetSystem& sys,
                           std::span<const SetId> remaining_sets,
                           std::span<const ElementId> uncovered,
                           std::span<const int> per_round, int tau) {
  if (tau < 1 || tau > static_cast<int>(uncovered.size())) {
    throw Error(ErrorCode::kInvalidArgument,
                "tau = " + std::to_string(tau) + " outside [1, " +
                    std::to_string(uncovered.size()) + "]");
  }
  MkccLp out = BuildCoverageSkeleton(sys, remaining_sets, uncovered, per_round);
  out.lp.sense = Sense::kMinimize;
  const int nx = out.num_set_vars();
  for (int i = 0; i < nx; ++i) out.lp.objective[i] = sys.weight(out.set_ids[i]);
  LpConstraint target;
  target.coeffs.assign(out.lp.num_vars(), 0.0);
  for (size_t j = 0; j < out.element_ids.size(); ++j) {
    target.coeffs[nx + j] = 1.0;
  }
  target.relation = Relation::kGreaterEqual;
  target.rhs = tau;
  out.lp.constraints.push_back(std::move(target));
  return out;
}

}  // namespace fairsc
