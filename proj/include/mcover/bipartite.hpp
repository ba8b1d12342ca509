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

#include "mcover/hypergraph.hpp"
#include "mcover/limits.hpp"

namespace mcover {

using GraphEdge = SimpleGraph::EdgeT;

/// Maximum matching with a minimum vertex cover of equal size (König).
struct BipartiteDuality {
  std::vector<GraphEdge> matching;
  std::vector<std::uint32_t> cover;
};

/// Augmenting paths in canonical order (B vertices ascending, neighbours
/// ascending). The cover is (B \ Z) u (C n Z) where Z is everything reached
/// from unmatched B vertices by alternating paths. StructureError without a
/// bipartition.
BipartiteDuality bip_matching_cover(const SimpleGraph& g);

/// Maximum edge set with every degree <= p, by max flow with capacity p on
/// each vertex.
std::vector<GraphEdge> p_factor_max(const SimpleGraph& g, std::size_t p);

struct ZMinimum {
  std::size_t value = 0;
  std::vector<GraphEdge> z;
};

/// min over Z subset of E(G) of |Z| + p * tau(G - Z), by enumerating every Z.
/// More than `limits.bruteforce_edges` edges raise SizeLimitExceeded.
ZMinimum min_z_value(const SimpleGraph& g, std::size_t p, const Limits& limits = {});

/// tau(G) = nu(G) of a bipartite graph given by its edge list; shorthand
/// used by the brute-force paths.
std::size_t bipartite_cover_number(const SimpleGraph& g);

}  // namespace mcover
