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

struct SunflowerWitness {
  std::vector<VertexSet> petals;  // edges of H, pairwise meeting exactly in core
  VertexSet core;
};

/// Largest sunflower over the first core (canonical order) that carries at
/// least k+1 petals. Candidate cores are the pairwise edge intersections.
std::optional<SunflowerWitness> sunflower_find(const Hypergraph& h, const Limits& limits = {});

bool is_sunflower(const Hypergraph& h, const SunflowerWitness& w);

/// Replaces the petals by the single edge core + fresh vertices "t1", "t2", ...
/// Requires a valid witness and nu^(m)(H) = 1.
Hypergraph sunflower_compress(const Hypergraph& h, const SunflowerWitness& w, std::size_t m,
                              const Limits& limits = {});

}  // namespace mcover
