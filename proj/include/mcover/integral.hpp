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

#include "mcover/derived.hpp"
#include "mcover/hypergraph.hpp"
#include "mcover/limits.hpp"

namespace mcover {

/// Integral m-cover: a set of m-sets hitting every edge.
struct CoverCert {
  std::vector<VertexSet> msets;
  std::size_t size() const { return msets.size(); }
};

/// Integral m-matching: edges pairwise sharing fewer than m vertices.
struct MatchingCert {
  std::vector<VertexSet> edges;
  std::size_t size() const { return edges.size(); }
};

struct SearchStats {
  std::size_t nodes = 0;
  std::vector<std::size_t> bound_trace;  // incumbent sizes in discovery order
};

struct CoverResult {
  std::size_t value = 0;
  CoverCert cert;
  SearchStats stats;
};

struct MatchingResult {
  std::size_t value = 0;
  MatchingCert cert;
  SearchStats stats;
};

/// tau^(m)(H) by branch and bound on the derived system: branch on the
/// uncovered block with fewest admissible m-sets, prune with a disjoint-block
/// packing bound, seed with a greedy cover, and stop early at the LP bound
/// when the LP is small enough. SizeLimitExceeded past `limits.search_nodes`.
CoverResult tau_int(const Hypergraph& h, std::size_t m, const Limits& limits = {});

/// nu^(m)(H) as a maximum clique of the "shares fewer than m vertices"
/// graph on E(H), with greedy-colouring bounds.
MatchingResult nu_int(const Hypergraph& h, std::size_t m, const Limits& limits = {});

}  // namespace mcover
