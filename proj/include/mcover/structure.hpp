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
#include <vector>

#include "mcover/hypergraph.hpp"
#include "mcover/limits.hpp"

namespace mcover {

/// T(G): the 3-uniform hypergraph of vertex triples spanning triangles of G.
/// Its vertex set is V(G) (labels), including vertices on no triangle.
Hypergraph triangle_hypergraph(const SimpleGraph& g);

/// True iff no two edges share more than one vertex.
bool is_linear(const Hypergraph& h);

/// Injective map V(P) -> V(H) carrying every edge of P onto an edge of H,
/// indexed by P's vertex index. Plain backtracking with degree pruning;
/// patterns with more than `limits.pattern_vertices` vertices raise
/// SizeLimitExceeded.
std::optional<std::vector<Vertex>> contains_copy(const Hypergraph& h, const Hypergraph& pattern,
                                                 const Limits& limits = {});

/// Maximum number of edges containing a common m-set (Delta of H^(m)).
std::size_t derived_max_degree(const Hypergraph& h, std::size_t m);

}  // namespace mcover
