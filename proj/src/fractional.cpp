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

#include "mcover/fractional.hpp"

#include <algorithm>
#include <map>

#include "mcover/error.hpp"

namespace mcover {

namespace {

VertexSet block_edge(const DerivedSystem& d, std::size_t b) {
  VertexSet e;
  for (std::size_t g : d.blocks[b]) e = set_union(e, d.ground[g]);
  return e;
}

}  // namespace

LpProblem cover_lp(const DerivedSystem& d) {
  LpProblem p;
  p.sense = LpProblem::Sense::Minimize;
  p.objective.assign(d.ground.size(), 1);
  for (const auto& block : d.blocks) {
    std::vector<Rat> row(d.ground.size(), 0);
    for (std::size_t g : block) row[g] = 1;
    p.rows.push_back(std::move(row));
    p.row_senses.push_back(LpProblem::RowSense::GreaterEqual);
    p.rhs.emplace_back(1);
  }
  return p;
}

LpProblem matching_lp(const DerivedSystem& d) {
  LpProblem p;
  p.sense = LpProblem::Sense::Maximize;
  p.objective.assign(d.blocks.size(), 1);
  p.rows.assign(d.ground.size(), std::vector<Rat>(d.blocks.size(), 0));
  for (std::size_t b = 0; b < d.blocks.size(); ++b)
    for (std::size_t g : d.blocks[b]) p.rows[g][b] = 1;
  p.row_senses.assign(d.ground.size(), LpProblem::RowSense::LessEqual);
  p.rhs.assign(d.ground.size(), 1);
  return p;
}

FractionalCover tau_star(const Hypergraph& h, std::size_t m, const Limits& limits) {
  const DerivedSystem d = derive(h, m, limits);
  const LpProblem p = cover_lp(d);
  const LpSolution s = lp_solve(p, limits);
  if (s.status != LpStatus::Optimal) fail(ErrorKind::InternalContradiction, "cover LP not optimal");
  FractionalCover out{s.value, WeightFn(WeightKind::Cover, m), WeightFn(WeightKind::Matching, m)};
  for (std::size_t g = 0; g < d.ground.size(); ++g) out.cover.set(d.ground[g], s.primal[g]);
  for (std::size_t b = 0; b < d.blocks.size(); ++b) out.dual.set(h.edge(d.source[b]), s.dual[b]);
  return out;
}

FractionalMatching nu_star(const Hypergraph& h, std::size_t m, const Limits& limits) {
  const DerivedSystem d = derive(h, m, limits);
  const LpProblem p = matching_lp(d);
  const LpSolution s = lp_solve(p, limits);
  if (s.status != LpStatus::Optimal) fail(ErrorKind::InternalContradiction, "matching LP not optimal");
  FractionalMatching out{s.value, WeightFn(WeightKind::Matching, m), WeightFn(WeightKind::Cover, m)};
  for (std::size_t b = 0; b < d.blocks.size(); ++b) out.matching.set(h.edge(d.source[b]), s.primal[b]);
  for (std::size_t g = 0; g < d.ground.size(); ++g) out.dual.set(d.ground[g], s.dual[g]);
  return out;
}

bool check_slackness(const WeightFn& cover, const WeightFn& matching, const DerivedSystem& d) {
  if (cover.kind() != WeightKind::Cover || matching.kind() != WeightKind::Matching)
    fail(ErrorKind::InvalidCertificate, "expected a cover and a matching");

  std::vector<VertexSet> edges;
  edges.reserve(d.blocks.size());
  for (std::size_t b = 0; b < d.blocks.size(); ++b) edges.push_back(block_edge(d, b));
  std::sort(edges.begin(), edges.end());

  for (const auto& [key, w] : cover.support())
    if (key.size() != d.m) fail(ErrorKind::InvalidCertificate, "cover key of wrong size");
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    Rat sum = 0;
    for (std::size_t g : d.blocks[b]) sum += cover.at(d.ground[g]);
    if (sum < 1) fail(ErrorKind::InvalidCertificate, "cover leaves a block under-covered");
  }

  std::vector<Rat> load(d.ground.size(), 0);
  for (const auto& [key, w] : matching.support()) {
    auto it = std::lower_bound(edges.begin(), edges.end(), key);
    if (it == edges.end() || *it != key) fail(ErrorKind::InvalidCertificate, "matching weight on a non-edge");
    for (const auto& s : subsets_of_size(key, d.m)) load[*d.ground_index(s)] += w;
  }
  for (const auto& l : load)
    if (l > 1) fail(ErrorKind::InvalidCertificate, "matching overloads an m-set");

  for (const auto& [key, w] : cover.support()) {
    auto g = d.ground_index(key);
    // Weight on an m-set outside every edge is slack by definition.
    if (!g || load[*g] != 1) return false;
  }
  return true;
}

}  // namespace mcover
