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

#include "mcover/sunflower.hpp"

#include <algorithm>
#include <set>

#include "mcover/covers.hpp"
#include "mcover/error.hpp"
#include "mcover/integral.hpp"

namespace mcover {

std::optional<SunflowerWitness> sunflower_find(const Hypergraph& h, const Limits& limits) {
  const std::size_t k = h.uniformity();
  std::set<VertexSet> cores;
  for (std::size_t i = 0; i < h.edge_count(); ++i)
    for (std::size_t j = i + 1; j < h.edge_count(); ++j) cores.insert(set_intersection(h.edge(i), h.edge(j)));

  for (const auto& core : cores) {
    std::vector<std::vector<std::string>> petal_tokens;
    std::vector<VertexSet> through;
    for (const auto& e : h.edges()) {
      if (!is_subset(core, e)) continue;
      through.push_back(e);
      petal_tokens.push_back(h.to_tokens(set_difference(e, core)));
    }
    if (through.size() < k + 1) continue;
    // Petals outside the core are k-|core| sets; a sunflower is a 1-matching of them.
    const Hypergraph petals = Hypergraph::from_tokens(petal_tokens);
    const auto best = nu_int(petals, 1, limits);
    if (best.value < k + 1) continue;
    SunflowerWitness w;
    w.core = core;
    for (const auto& p : best.cert.edges) w.petals.push_back(set_union(core, h.to_set(petals.to_tokens(p))));
    std::sort(w.petals.begin(), w.petals.end());
    return w;
  }
  return std::nullopt;
}

bool is_sunflower(const Hypergraph& h, const SunflowerWitness& w) {
  if (w.petals.size() < h.uniformity() + 1) return false;
  for (const auto& e : w.petals)
    if (!h.has_edge(e)) return false;
  for (std::size_t i = 0; i < w.petals.size(); ++i)
    for (std::size_t j = i + 1; j < w.petals.size(); ++j)
      if (set_intersection(w.petals[i], w.petals[j]) != w.core) return false;
  return true;
}

Hypergraph sunflower_compress(const Hypergraph& h, const SunflowerWitness& w, std::size_t m, const Limits& limits) {
  if (!is_sunflower(h, w)) fail(ErrorKind::InvalidCertificate, "witness is not a sunflower of at least k+1 edges");
  require_intersecting(h, m, limits);

  std::vector<std::vector<std::string>> edges;
  for (const auto& e : h.edges())
    if (!std::binary_search(w.petals.begin(), w.petals.end(), e)) edges.push_back(h.to_tokens(e));
  std::vector<std::string> merged = h.to_tokens(w.core);
  for (std::size_t j = 1; merged.size() < h.uniformity(); ++j) {
    const std::string token = "t" + std::to_string(j);
    if (!h.find_vertex(token)) merged.push_back(token);
  }
  edges.push_back(std::move(merged));
  return Hypergraph::from_tokens(edges, {}, h.uniformity());
}

}  // namespace mcover
