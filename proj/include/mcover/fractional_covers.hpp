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
#include <optional>
#include <string>
#include <vector>

#include "mcover/hypergraph.hpp"
#include "mcover/integral.hpp"
#include "mcover/limits.hpp"
#include "mcover/weight_fn.hpp"

namespace mcover {

/// One complementary couple {p, q} inside a matching edge.
struct CoupleStep {
  std::size_t matching_index = 0;
  VertexSet p, q;
  std::size_t h_p = 0, h_q = 0;  // |H(p)|, |H(q)|
  VertexSet r;                   // pair that received the extra 1/2
};

struct Cover45 {
  WeightFn cover{WeightKind::Cover, 2};
  std::vector<VertexSet> matching;
  std::vector<CoupleStep> steps;

  std::string trace(const Hypergraph& h) const;
};

/// Half weights on every pair of a maximum 2-matching, plus one extra half
/// per complementary couple. Total is exactly 4.5 |M|.
Cover45 cover45(const Hypergraph& h, const MatchingCert& m, const Limits& limits = {});

struct CrossingCover {
  CoverCert cover;
  std::vector<VertexSet> support;  // U
  VertexSet side_a, side_b;
  std::size_t crossing = 0;
  std::size_t moves = 0;

  std::string trace(const Hypergraph& h) const;
};

/// Local-search bipartition of the pair graph U; the pairs not crossing the
/// cut form a 2-cover of size at most |U|/2. Every edge must hold at least
/// five pairs of U.
CrossingCover crossing_partition_cover(const Hypergraph& h, const std::vector<VertexSet>& support);

struct SupportStep {
  Rat tau_star;
  std::vector<VertexSet> support;
  Rat incidence_total;                // sum over U of the matching load
  std::optional<VertexSet> heavy;     // first pair with weight >= 1/4
  std::optional<CrossingCover> crossing;
};

/// Optimal fractional pair, support U, the identity |U| = sum of loads, and
/// the partition step when every support weight is below 1/4.
SupportStep lp_support_step(const Hypergraph& h, const Limits& limits = {});

}  // namespace mcover
