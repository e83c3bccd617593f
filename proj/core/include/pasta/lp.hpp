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

#ifndef PASTA_LP_HPP
#define PASTA_LP_HPP

#include <limits>
#include <string>
#include <vector>

#include "pasta/catalog.hpp"

namespace pasta {

enum class Relation { kLe, kEq, kGe };

// A small dense linear program: maximize objective . x subject to the listed
// rows and per-variable bounds (default x >= 0; lower() = -inf makes a
// variable free, finite upper bounds are allowed).
struct LinearProgram {
  struct Row {
    Vec coeffs;
    Relation relation = Relation::kLe;
    double rhs = 0.0;
  };

  Vec objective;
  std::vector<Row> rows;
  Vec lower;
  Vec upper;

  static constexpr double kInf = std::numeric_limits<double>::infinity();

  static LinearProgram maximize(Vec objective);
  void add_row(Vec coeffs, Relation relation, double rhs);
  int num_vars() const { return static_cast<int>(objective.size()); }

  void validate() const;
};

enum class LPStatus { kOptimal, kInfeasible, kUnbounded };

std::string lp_status_name(LPStatus status);

struct LPSolution {
  LPStatus status = LPStatus::kInfeasible;
  Vec x;                // primal point (meaningful when optimal)
  double objective = 0.0;
  int iterations = 0;   // simplex pivots, both phases
};

// Dense two-phase primal simplex with Bland's anti-cycling rule and pivot
// tolerance 1e-9. Deterministic: the same program always yields bitwise
// identical output. Infeasible/unbounded come back as statuses, not errors.
LPSolution solve_lp(const LinearProgram& problem);

}  // namespace pasta

#endif  // PASTA_LP_HPP
