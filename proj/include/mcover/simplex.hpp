// Copyright 2026 The mcover Authors
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

#pragma once

#include <cstddef>
#include <vector>

#include "mcover/limits.hpp"
#include "mcover/rational.hpp"

namespace mcover {

/// LP over nonnegative variables: optimize objective . x subject to
/// rows[i] . x (<=|>=|=) rhs[i], x >= 0.
struct LpProblem {
  enum class Sense { Maximize, Minimize };
  enum class RowSense { LessEqual, GreaterEqual, Equal };

  Sense sense = Sense::Maximize;
  std::vector<Rat> objective;
  std::vector<std::vector<Rat>> rows;
  std::vector<RowSense> row_senses;
  std::vector<Rat> rhs;

  std::size_t variable_count() const { return objective.size(); }
  std::size_t row_count() const { return rows.size(); }
  std::size_t nonzeros() const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// When optimal, `dual` is an optimal solution of the Lagrangian dual with
/// the usual sign convention (for a maximization, y >= 0 on <= rows and
/// y <= 0 on >= rows; mirrored for minimization), and
/// objective . primal == rhs . dual == value.
struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rat value;
  std::vector<Rat> primal;
  std::vector<Rat> dual;
};

/// Two-phase tableau simplex over exact rationals with Bland's rule.
/// Dimension mismatches raise MalformedProblem; more than
/// `limits.lp_nonzeros` constraint nonzeros raise SizeLimitExceeded.
LpSolution lp_solve(const LpProblem& problem, const Limits& limits = {});

/// Independent check of an optimal solution: primal feasibility, dual
/// feasibility and equal objective values.
bool certifies_optimality(const LpProblem& problem, const LpSolution& solution);

}  // namespace mcover
