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

#include "mcover/derived.hpp"

#include <algorithm>
#include <string>

#include "mcover/error.hpp"

namespace mcover {

std::optional<std::size_t> DerivedSystem::ground_index(const VertexSet& mset) const {
  auto it = std::lower_bound(ground.begin(), ground.end(), mset);
  if (it == ground.end() || *it != mset) return std::nullopt;
  return static_cast<std::size_t>(it - ground.begin());
}

std::vector<std::vector<std::size_t>> DerivedSystem::incidence() const {
  std::vector<std::vector<std::size_t>> inc(ground.size());
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::size_t g : blocks[b]) inc[g].push_back(b);
  return inc;
}

std::size_t DerivedSystem::nonzeros() const {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.size();
  return total;
}

DerivedSystem derive(const Hypergraph& h, std::size_t m, const Limits& limits) {
  const std::size_t k = h.uniformity();
  if (m < 1 || m > k)
    fail(ErrorKind::OrderOutOfRange, "order " + std::to_string(m) + " outside 1.." + std::to_string(k));
  const std::uint64_t per_block = binomial(k, m);
  if (per_block * h.edge_count() > limits.derived_incidences)
    fail(ErrorKind::SizeLimitExceeded, "derived system has " + std::to_string(per_block * h.edge_count()) +
                                           " incidences (limit " + std::to_string(limits.derived_incidences) + ")");

  DerivedSystem d;
  d.m = m;
  std::vector<std::vector<VertexSet>> per_edge;
  per_edge.reserve(h.edge_count());
  for (const auto& e : h.edges()) {
    per_edge.push_back(subsets_of_size(e, m));
    d.ground.insert(d.ground.end(), per_edge.back().begin(), per_edge.back().end());
  }
  std::sort(d.ground.begin(), d.ground.end());
  d.ground.erase(std::unique(d.ground.begin(), d.ground.end()), d.ground.end());

  d.blocks.reserve(per_edge.size());
  for (std::size_t i = 0; i < per_edge.size(); ++i) {
    std::vector<std::size_t> block;
    block.reserve(per_edge[i].size());
    for (const auto& s : per_edge[i]) block.push_back(*d.ground_index(s));
    std::sort(block.begin(), block.end());
    d.blocks.push_back(std::move(block));
    d.source.push_back(i);
  }
  return d;
}

bool is_m_matching(const Hypergraph& h, const std::vector<VertexSet>& subset, std::size_t m) {
  for (const auto& e : subset)
    if (!h.has_edge(e))
      fail(ErrorKind::InvalidCertificateReference, "edge " + h.format_set(e) + " not in hypergraph");
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = i + 1; j < subset.size(); ++j)
      if (subset[i] == subset[j] || intersection_size(subset[i], subset[j]) >= m) return false;
  return true;
}

bool is_m_cover(const Hypergraph& h, const std::vector<VertexSet>& cover, std::size_t m) {
  for (const auto& c : cover) {
    if (c.size() != m)
      fail(ErrorKind::MalformedCover, "cover member of size " + std::to_string(c.size()) + ", expected " +
                                          std::to_string(m));
    if (std::adjacent_find(c.begin(), c.end(), std::greater_equal<>()) != c.end())
      fail(ErrorKind::MalformedCover, "cover member is not a strictly sorted set");
  }
  return std::all_of(h.edges().begin(), h.edges().end(), [&](const VertexSet& e) {
    return std::any_of(cover.begin(), cover.end(), [&](const VertexSet& c) { return is_subset(c, e); });
  });
}

}  // namespace mcover
