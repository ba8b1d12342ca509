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

#include "mcover/simplex.hpp"

#include <optional>
#include <string>

#include "mcover/error.hpp"

namespace mcover {

std::size_t LpProblem::nonzeros() const {
  std::size_t count = 0;
  for (const auto& row : rows)
    for (const auto& a : row)
      if (a != 0) ++count;
  return count;
}

namespace {

using RowSense = LpProblem::RowSense;

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : cols_(cols), cells_(rows, std::vector<Rat>(cols + 1)), reduced_(cols + 1), basis_(rows, 0) {}

  Rat& at(std::size_t r, std::size_t c) { return cells_[r][c]; }
  const Rat& rhs(std::size_t r) const { return cells_[r][cols_]; }
  Rat& rhs(std::size_t r) { return cells_[r][cols_]; }
  std::size_t& basic(std::size_t r) { return basis_[r]; }
  std::size_t basic(std::size_t r) const { return basis_[r]; }
  std::size_t rows() const { return cells_.size(); }
  std::size_t cols() const { return cols_; }
  const Rat& reduced(std::size_t c) const { return reduced_[c]; }
  const Rat& objective_value() const { return reduced_[cols_]; }

  void price(const std::vector<Rat>& cost) {
    for (std::size_t c = 0; c <= cols_; ++c) {
      Rat sum = 0;
      for (std::size_t r = 0; r < rows(); ++r) {
        const Rat& cb = cost[basis_[r]];
        if (cb != 0 && cells_[r][c] != 0) sum += cb * cells_[r][c];
      }
      reduced_[c] = c < cols_ ? Rat(sum - cost[c]) : sum;
    }
  }

  void pivot(std::size_t pr, std::size_t pc) {
    auto& prow = cells_[pr];
    const Rat inv = 1 / prow[pc];
    std::vector<std::size_t> nz;
    for (std::size_t c = 0; c <= cols_; ++c) {
      if (prow[c] != 0) {
        prow[c] *= inv;
        nz.push_back(c);
      }
    }
    auto eliminate = [&](std::vector<Rat>& row) {
      if (row[pc] == 0) return;
      const Rat f = row[pc];
      for (std::size_t c : nz) row[c] -= f * prow[c];
    };
    for (std::size_t r = 0; r < rows(); ++r)
      if (r != pr) eliminate(cells_[r]);
    eliminate(reduced_);
    basis_[pr] = pc;
  }

  /// Maximizes under the priced cost row. Returns false when unbounded.
  bool optimize(const std::vector<bool>& may_enter) {
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t c = 0; c < cols_; ++c) {
        if (may_enter[c] && reduced_[c] < 0) {
          entering = c;
          break;
        }
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rat best_ratio;
      for (std::size_t r = 0; r < rows(); ++r) {
        const Rat& a = cells_[r][*entering];
        if (a <= 0) continue;
        Rat ratio = rhs(r) / a;
        if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[*leaving])) {
          leaving = r;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

 private:
  std::size_t cols_;
  std::vector<std::vector<Rat>> cells_;
  std::vector<Rat> reduced_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpSolution lp_solve(const LpProblem& p, const Limits& limits) {
  const std::size_t n = p.variable_count();
  const std::size_t m = p.row_count();
  if (p.row_senses.size() != m || p.rhs.size() != m)
    fail(ErrorKind::MalformedProblem, "row, sense and rhs counts differ");
  for (const auto& row : p.rows)
    if (row.size() != n) fail(ErrorKind::MalformedProblem, "row length differs from variable count");
  if (p.nonzeros() > limits.lp_nonzeros)
    fail(ErrorKind::SizeLimitExceeded, "LP has " + std::to_string(p.nonzeros()) + " nonzeros (limit " +
                                           std::to_string(limits.lp_nonzeros) + ")");

  // Normalize to rhs >= 0, then lay out [structural | slack/surplus | artificial].
  std::vector<bool> flipped(m, false);
  std::vector<RowSense> senses(p.row_senses);
  for (std::size_t i = 0; i < m; ++i) {
    if (p.rhs[i] < 0) {
      flipped[i] = true;
      if (senses[i] == RowSense::LessEqual) {
        senses[i] = RowSense::GreaterEqual;
      } else if (senses[i] == RowSense::GreaterEqual) {
        senses[i] = RowSense::LessEqual;
      }
    }
  }
  std::size_t slack_count = 0, artificial_count = 0;
  for (auto s : senses) {
    if (s != RowSense::Equal) ++slack_count;
    if (s != RowSense::LessEqual) ++artificial_count;
  }
  const std::size_t cols = n + slack_count + artificial_count;
  const std::size_t first_artificial = n + slack_count;
  Tableau tab(m, cols);
  std::vector<std::size_t> unit_column(m);
  std::size_t next_slack = n, next_art = first_artificial;
  for (std::size_t i = 0; i < m; ++i) {
    const int sign = flipped[i] ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j)
      if (p.rows[i][j] != 0) tab.at(i, j) = sign * p.rows[i][j];
    tab.rhs(i) = sign * p.rhs[i];
    switch (senses[i]) {
      case RowSense::LessEqual:
        tab.at(i, next_slack) = 1;
        unit_column[i] = next_slack++;
        break;
      case RowSense::GreaterEqual:
        tab.at(i, next_slack++) = -1;
        tab.at(i, next_art) = 1;
        unit_column[i] = next_art++;
        break;
      case RowSense::Equal:
        tab.at(i, next_art) = 1;
        unit_column[i] = next_art++;
        break;
    }
    tab.basic(i) = unit_column[i];
  }

  LpSolution sol;
  if (artificial_count > 0) {
    std::vector<Rat> phase1(cols, 0);
    for (std::size_t c = first_artificial; c < cols; ++c) phase1[c] = -1;
    tab.price(phase1);
    tab.optimize(std::vector<bool>(cols, true));
    if (tab.objective_value() < 0) {
      sol.status = LpStatus::Infeasible;
      return sol;
    }
    // Zero-level artificials leave the basis where a structural or slack
    // column can replace them; the rest sit on redundant rows.
    for (std::size_t r = 0; r < m; ++r) {
      if (tab.basic(r) < first_artificial) continue;
      for (std::size_t c = 0; c < first_artificial; ++c) {
        if (tab.at(r, c) != 0) {
          tab.pivot(r, c);
          break;
        }
      }
    }
  }

  const bool minimize = p.sense == LpProblem::Sense::Minimize;
  std::vector<Rat> cost(cols, 0);
  for (std::size_t j = 0; j < n; ++j) cost[j] = minimize ? Rat(-p.objective[j]) : p.objective[j];
  tab.price(cost);
  std::vector<bool> may_enter(cols, true);
  for (std::size_t c = first_artificial; c < cols; ++c) may_enter[c] = false;
  if (!tab.optimize(may_enter)) {
    sol.status = LpStatus::Unbounded;
    return sol;
  }

  sol.status = LpStatus::Optimal;
  sol.primal.assign(n, 0);
  for (std::size_t r = 0; r < m; ++r)
    if (tab.basic(r) < n) sol.primal[tab.basic(r)] = tab.rhs(r);
  sol.dual.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    // Unit columns start as e_i and carry zero cost, so their reduced cost is y_i.
    Rat y = tab.reduced(unit_column[i]);
    if (flipped[i]) y = -y;
    if (minimize) y = -y;
    sol.dual[i] = y;
  }
  sol.value = minimize ? Rat(-tab.objective_value()) : tab.objective_value();
  return sol;
}

bool certifies_optimality(const LpProblem& p, const LpSolution& s) {
  const std::size_t n = p.variable_count();
  const std::size_t m = p.row_count();
  if (s.status != LpStatus::Optimal || s.primal.size() != n || s.dual.size() != m) return false;
  const bool maximize = p.sense == LpProblem::Sense::Maximize;

  Rat primal_value = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (s.primal[j] < 0) return false;
    primal_value += p.objective[j] * s.primal[j];
  }
  for (std::size_t i = 0; i < m; ++i) {
    Rat lhs = 0;
    for (std::size_t j = 0; j < n; ++j) lhs += p.rows[i][j] * s.primal[j];
    switch (p.row_senses[i]) {
      case RowSense::LessEqual:
        if (lhs > p.rhs[i]) return false;
        break;
      case RowSense::GreaterEqual:
        if (lhs < p.rhs[i]) return false;
        break;
      case RowSense::Equal:
        if (lhs != p.rhs[i]) return false;
        break;
    }
  }

  Rat dual_value = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const Rat& y = s.dual[i];
    dual_value += p.rhs[i] * y;
    const bool le = p.row_senses[i] == RowSense::LessEqual;
    const bool ge = p.row_senses[i] == RowSense::GreaterEqual;
    // Max: y >= 0 on <=, y <= 0 on >=. Min: mirrored.
    if (maximize && ((le && y < 0) || (ge && y > 0))) return false;
    if (!maximize && ((ge && y < 0) || (le && y > 0))) return false;
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rat col = 0;
    for (std::size_t i = 0; i < m; ++i) col += p.rows[i][j] * s.dual[i];
    if (maximize ? col < p.objective[j] : col > p.objective[j]) return false;
  }
  return primal_value == s.value && dual_value == s.value;
}

}  // namespace mcover
