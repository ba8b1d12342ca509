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

#include "mcover/derived.hpp"
#include "mcover/hypergraph.hpp"
#include "mcover/limits.hpp"
#include "mcover/simplex.hpp"
#include "mcover/weight_fn.hpp"

namespace mcover {

/// Optimal fractional m-cover together with the optimal fractional
/// m-matching read off the LP duals.
struct FractionalCover {
  Rat value;
  WeightFn cover{WeightKind::Cover, 0};
  WeightFn dual{WeightKind::Matching, 0};
};

/// Optimal fractional m-matching together with the dual fractional m-cover.
struct FractionalMatching {
  Rat value;
  WeightFn matching{WeightKind::Matching, 0};
  WeightFn dual{WeightKind::Cover, 0};
};

/// LP encodings of tau*^(m) and nu*^(m). Columns follow the canonical ground
/// (resp. edge) order; rows follow the edge (resp. ground) order.
LpProblem cover_lp(const DerivedSystem& d);
LpProblem matching_lp(const DerivedSystem& d);

/// tau*^(m)(H): minimum total weight on m-sets with every edge's block sum >= 1.
FractionalCover tau_star(const Hypergraph& h, std::size_t m, const Limits& limits = {});
/// nu*^(m)(H): maximum total edge weight with every m-set's load <= 1.
FractionalMatching nu_star(const Hypergraph& h, std::size_t m, const Limits& limits = {});

/// Complementary slackness on the cover side: every m-set carrying positive
/// cover weight is saturated (incident matching weight exactly 1). Inputs
/// that are not feasible for `d` raise InvalidCertificate.
bool check_slackness(const WeightFn& cover, const WeightFn& matching, const DerivedSystem& d);

}  // namespace mcover
