// Copyright 2026 The pasta Authors
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

#include "pasta/lp.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace pasta {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kPhase1Tol = 1e-8;

// Standard-form working problem: maximize cost . x, A x = b, x >= 0.
struct Standard {
  Eigen::MatrixXd a;
  Vec b;
  Vec cost;
  std::vector<int> basis;       // one basic column per row
  int structural_cols = 0;      // columns excluding artificials
  int total_cols = 0;

  // mapping back to user variables: x_user[j] = shift[j] + x[pos_col[j]]
  // (- x[neg_col[j]] when the variable is free and split in two parts)
  std::vector<double> shift;
  std::vector<int> pos_col;
  std::vector<int> neg_col;
};

enum class PivotResult { kOptimal, kUnbounded };

// Primal simplex with Bland's rule over the active cost vector; columns with
// index >= allowed_cols never enter (used to freeze artificials in phase 2).
PivotResult run_simplex(Standard& st, const Vec& cost, int allowed_cols, int* iterations) {
  const int m = static_cast<int>(st.b.size());
  for (;;) {
    // reduced costs r_j = c_j - y . A_j with y_i = c_{basis_i}
    Vec y(m);
    for (int i = 0; i < m; ++i) y[i] = cost[st.basis[i]];
    int entering = -1;
    for (int j = 0; j < allowed_cols; ++j) {
      const double reduced = cost[j] - y.dot(st.a.col(j));
      if (reduced > kPivotTol) {
        entering = j;  // Bland: smallest improving index
        break;
      }
    }
    if (entering < 0) return PivotResult::kOptimal;

    int leave_row = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < m; ++i) {
      const double aij = st.a(i, entering);
      if (aij <= kPivotTol) continue;
      const double ratio = st.b[i] / aij;
      if (leave_row < 0 || ratio < best_ratio - kPivotTol ||
          (std::abs(ratio - best_ratio) <= kPivotTol &&
           st.basis[i] < st.basis[leave_row])) {
        leave_row = i;
        best_ratio = ratio;
      }
    }
    if (leave_row < 0) return PivotResult::kUnbounded;

    // pivot
    const double pivot = st.a(leave_row, entering);
    st.a.row(leave_row) /= pivot;
    st.b[leave_row] /= pivot;
    for (int i = 0; i < m; ++i) {
      if (i == leave_row) continue;
      const double factor = st.a(i, entering);
      if (factor == 0.0) continue;
      st.a.row(i) -= factor * st.a.row(leave_row);
      st.b[i] -= factor * st.b[leave_row];
    }
    st.basis[leave_row] = entering;
    ++*iterations;
  }
}

void drop_row(Standard& st, int row) {
  const int m = static_cast<int>(st.b.size());
  for (int i = row; i + 1 < m; ++i) {
    st.a.row(i) = st.a.row(i + 1);
    st.b[i] = st.b[i + 1];
    st.basis[i] = st.basis[i + 1];
  }
  st.a.conservativeResize(m - 1, Eigen::NoChange);
  st.b.conservativeResize(m - 1);
  st.basis.pop_back();
}

}  // namespace

LinearProgram LinearProgram::maximize(Vec objective) {
  LinearProgram lp;
  const int n = static_cast<int>(objective.size());
  lp.objective = std::move(objective);
  lp.lower = Vec::Zero(n);
  lp.upper = Vec::Constant(n, kInf);
  return lp;
}

void LinearProgram::add_row(Vec coeffs, Relation relation, double rhs) {
  rows.push_back(Row{std::move(coeffs), relation, rhs});
}

void LinearProgram::validate() const {
  const int n = num_vars();
  if (n < 1) throw std::invalid_argument("linear program has no variables");
  if (!objective.allFinite()) throw std::invalid_argument("objective has non-finite entries");
  if (lower.size() != n || upper.size() != n)
    throw std::invalid_argument("bound vectors must match the variable count");
  for (const Row& row : rows) {
    if (row.coeffs.size() != n)
      throw std::invalid_argument("constraint row has wrong dimension");
    if (!row.coeffs.allFinite() || !std::isfinite(row.rhs))
      throw std::invalid_argument("constraint has non-finite entries");
  }
  for (int j = 0; j < n; ++j) {
    if (std::isnan(lower[j]) || std::isnan(upper[j]))
      throw std::invalid_argument("variable bounds must not be NaN");
    if (lower[j] == kInf || upper[j] == -kInf)
      throw std::invalid_argument("variable bounds are inverted infinities");
  }
}

std::string lp_status_name(LPStatus status) {
  switch (status) {
    case LPStatus::kOptimal: return "optimal";
    case LPStatus::kInfeasible: return "infeasible";
    case LPStatus::kUnbounded: return "unbounded";
  }
  throw std::logic_error("unknown LP status");
}

LPSolution solve_lp(const LinearProgram& problem) {
  problem.validate();
  const int n = problem.num_vars();

  LPSolution out;
  out.x = Vec::Zero(n);

  // shift variables to lower bound 0, split free variables in two
  Standard st;
  st.shift.assign(n, 0.0);
  st.pos_col.assign(n, -1);
  st.neg_col.assign(n, -1);
  int cols = 0;
  for (int j = 0; j < n; ++j) {
    if (problem.lower[j] == -LinearProgram::kInf) {
      st.pos_col[j] = cols++;
      st.neg_col[j] = cols++;
    } else {
      st.shift[j] = problem.lower[j];
      st.pos_col[j] = cols++;
      if (problem.upper[j] < problem.lower[j]) {
        out.status = LPStatus::kInfeasible;
        return out;
      }
    }
  }

  // assemble rows in user variable space first, after the bound shift
  struct WorkRow {
    Vec coeffs;
    Relation relation;
    double rhs;
  };
  std::vector<WorkRow> work;
  work.reserve(problem.rows.size() + static_cast<std::size_t>(n));
  for (const auto& row : problem.rows) {
    double rhs = row.rhs;
    for (int j = 0; j < n; ++j) rhs -= row.coeffs[j] * st.shift[j];
    work.push_back({row.coeffs, row.relation, rhs});
  }
  for (int j = 0; j < n; ++j) {
    if (problem.upper[j] == LinearProgram::kInf) continue;
    Vec coeffs = Vec::Zero(n);
    coeffs[j] = 1.0;
    work.push_back({std::move(coeffs), Relation::kLe, problem.upper[j] - st.shift[j]});
  }

  const int m = static_cast<int>(work.size());
  int slack_count = 0;
  for (const auto& row : work)
    if (row.relation != Relation::kEq) ++slack_count;
  st.structural_cols = cols + slack_count;
  st.total_cols = st.structural_cols + m;  // one artificial per row at most

  st.a = Eigen::MatrixXd::Zero(m, st.total_cols);
  st.b = Vec::Zero(m);
  st.basis.assign(m, -1);

  Vec phase2_cost = Vec::Zero(st.total_cols);
  for (int j = 0; j < n; ++j) {
    phase2_cost[st.pos_col[j]] += problem.objective[j];
    if (st.neg_col[j] >= 0) phase2_cost[st.neg_col[j]] -= problem.objective[j];
  }

  Vec phase1_cost = Vec::Zero(st.total_cols);
  int slack_cursor = cols;
  int artificial_cursor = st.structural_cols;
  int artificials = 0;
  for (int i = 0; i < m; ++i) {
    double sign = 1.0;
    if (work[i].rhs < 0.0) sign = -1.0;  // normalize to b >= 0
    for (int j = 0; j < n; ++j) {
      const double value = sign * work[i].coeffs[j];
      if (value == 0.0) continue;
      st.a(i, st.pos_col[j]) += value;
      if (st.neg_col[j] >= 0) st.a(i, st.neg_col[j]) -= value;
    }
    st.b[i] = sign * work[i].rhs;
    Relation rel = work[i].relation;
    if (sign < 0.0) {
      if (rel == Relation::kLe) rel = Relation::kGe;
      else if (rel == Relation::kGe) rel = Relation::kLe;
    }
    if (rel == Relation::kLe) {
      st.a(i, slack_cursor) = 1.0;
      st.basis[i] = slack_cursor;  // slack starts basic (b >= 0 after normalization)
      ++slack_cursor;
    } else if (rel == Relation::kGe) {
      st.a(i, slack_cursor) = -1.0;
      ++slack_cursor;
    }
    if (st.basis[i] < 0) {
      st.a(i, artificial_cursor) = 1.0;
      phase1_cost[artificial_cursor] = -1.0;
      st.basis[i] = artificial_cursor;
      ++artificial_cursor;
      ++artificials;
    }
  }

  out.iterations = 0;
  if (artificials > 0) {
    run_simplex(st, phase1_cost, st.total_cols, &out.iterations);
    double infeasibility = 0.0;
    for (int i = 0; i < static_cast<int>(st.b.size()); ++i)
      if (st.basis[i] >= st.structural_cols) infeasibility += st.b[i];
    if (infeasibility > kPhase1Tol) {
      out.status = LPStatus::kInfeasible;
      return out;
    }
    // drive leftover artificials out of the basis or drop redundant rows
    for (int i = static_cast<int>(st.b.size()) - 1; i >= 0; --i) {
      if (st.basis[i] < st.structural_cols) continue;
      int pivot_col = -1;
      for (int j = 0; j < st.structural_cols; ++j) {
        if (std::abs(st.a(i, j)) > kPivotTol) {
          pivot_col = j;
          break;
        }
      }
      if (pivot_col < 0) {
        drop_row(st, i);
        continue;
      }
      const double pivot = st.a(i, pivot_col);
      st.a.row(i) /= pivot;
      st.b[i] /= pivot;
      for (int r = 0; r < static_cast<int>(st.b.size()); ++r) {
        if (r == i) continue;
        const double factor = st.a(r, pivot_col);
        if (factor == 0.0) continue;
        st.a.row(r) -= factor * st.a.row(i);
        st.b[r] -= factor * st.b[i];
      }
      st.basis[i] = pivot_col;
      ++out.iterations;
    }
  }

  const PivotResult result = run_simplex(st, phase2_cost, st.structural_cols, &out.iterations);
  if (result == PivotResult::kUnbounded) {
    out.status = LPStatus::kUnbounded;
    return out;
  }

  Vec full = Vec::Zero(st.total_cols);
  for (int i = 0; i < static_cast<int>(st.b.size()); ++i) full[st.basis[i]] = st.b[i];
  for (int j = 0; j < n; ++j) {
    double value = st.shift[j] + full[st.pos_col[j]];
    if (st.neg_col[j] >= 0) value -= full[st.neg_col[j]];
    out.x[j] = value;
  }
  out.objective = problem.objective.dot(out.x);
  out.status = LPStatus::kOptimal;
  return out;
}

}  // namespace pasta
