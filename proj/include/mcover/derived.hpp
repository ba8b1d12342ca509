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

/// H^(m): ground elements are the m-subsets occurring in edges of H, and
/// block i lists the ground indices of all m-subsets of edge i.
struct DerivedSystem {
  std::size_t m = 0;
  std::vector<VertexSet> ground;                  // sorted, deduplicated
  std::vector<std::vector<std::size_t>> blocks;   // block i <-> edge i
  std::vector<std::size_t> source;                // source[i] = edge index of block i

  /// Index of an m-set in `ground`, if present.
  std::optional<std::size_t> ground_index(const VertexSet& mset) const;
  /// For each ground element, the blocks containing it.
  std::vector<std::vector<std::size_t>> incidence() const;
  std::size_t nonzeros() const;
};

/// Throws OrderOutOfRange unless 1 <= m <= k, SizeLimitExceeded when the
/// block incidences exceed `limits.derived_incidences`.
DerivedSystem derive(const Hypergraph& h, std::size_t m, const Limits& limits = {});

/// True iff every two distinct edges of `subset` share fewer than m vertices.
/// Edges outside E(H) raise InvalidCertificateReference.
bool is_m_matching(const Hypergraph& h, const std::vector<VertexSet>& subset, std::size_t m);

/// True iff every edge of H contains some member of `cover`. Members of the
/// wrong size raise MalformedCover.
bool is_m_cover(const Hypergraph& h, const std::vector<VertexSet>& cover, std::size_t m);

}  // namespace mcover
