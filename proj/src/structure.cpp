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

#include "mcover/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "mcover/error.hpp"

namespace mcover {

Hypergraph triangle_hypergraph(const SimpleGraph& g) {
  std::vector<std::vector<std::string>> triples;
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  const auto& labels = g.labels();
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (std::uint32_t c = b + 1; c < n; ++c)
        if (g.adjacent(a, c) && g.adjacent(b, c)) triples.push_back({labels[a], labels[b], labels[c]});
    }
  return Hypergraph::from_tokens(triples, labels, 3);
}

bool is_linear(const Hypergraph& h) {
  const auto& edges = h.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (intersection_size(edges[i], edges[j]) > 1) return false;
  return true;
}

namespace {

class CopySearch {
 public:
  CopySearch(const Hypergraph& host, const Hypergraph& pattern) : host_(host), pattern_(pattern) {
    host_degree_.assign(host.vertex_count(), 0);
    for (const auto& e : host.edges())
      for (Vertex v : e) ++host_degree_[v];
    pattern_degree_.assign(pattern.vertex_count(), 0);
    for (const auto& e : pattern.edges())
      for (Vertex v : e) ++pattern_degree_[v];

    // Highest degree first, then prefer vertices sharing edges with those
    // already placed so edge checks fire early.
    std::vector<bool> placed(pattern.vertex_count(), false);
    std::vector<std::size_t> links(pattern.vertex_count(), 0);
    for (std::size_t step = 0; step < pattern.vertex_count(); ++step) {
      std::size_t best = pattern.vertex_count();
      for (std::size_t v = 0; v < pattern.vertex_count(); ++v) {
        if (placed[v]) continue;
        if (best == pattern.vertex_count() || links[v] > links[best] ||
            (links[v] == links[best] && pattern_degree_[v] > pattern_degree_[best]))
          best = v;
      }
      placed[best] = true;
      order_.push_back(static_cast<Vertex>(best));
      for (const auto& e : pattern.edges())
        if (std::binary_search(e.begin(), e.end(), static_cast<Vertex>(best)))
          for (Vertex u : e) ++links[u];
    }
    position_.assign(pattern.vertex_count(), 0);
    for (std::size_t i = 0; i < order_.size(); ++i) position_[order_[i]] = i;
    completes_at_.assign(order_.size(), {});
    for (std::size_t ei = 0; ei < pattern.edge_count(); ++ei) {
      std::size_t last = 0;
      for (Vertex v : pattern.edge(ei)) last = std::max(last, position_[v]);
      completes_at_[last].push_back(ei);
    }
    image_.assign(pattern.vertex_count(), 0);
    used_.assign(host.vertex_count(), false);
  }

  std::optional<std::vector<Vertex>> run() {
    if (extend(0)) return image_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex pv = order_[depth];
    for (Vertex hv = 0; hv < host_.vertex_count(); ++hv) {
      if (used_[hv] || host_degree_[hv] < pattern_degree_[pv]) continue;
      image_[pv] = hv;
      if (!edges_hold(depth)) continue;
      used_[hv] = true;
      if (extend(depth + 1)) return true;
      used_[hv] = false;
    }
    return false;
  }

  bool edges_hold(std::size_t depth) const {
    for (std::size_t ei : completes_at_[depth]) {
      VertexSet mapped;
      for (Vertex v : pattern_.edge(ei)) mapped.push_back(image_[v]);
      std::sort(mapped.begin(), mapped.end());
      if (!host_.has_edge(mapped)) return false;
    }
    return true;
  }

  const Hypergraph& host_;
  const Hypergraph& pattern_;
  std::vector<std::size_t> host_degree_;
  std::vector<std::size_t> pattern_degree_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> position_;
  std::vector<std::vector<std::size_t>> completes_at_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<Vertex>> contains_copy(const Hypergraph& h, const Hypergraph& pattern,
                                                 const Limits& limits) {
  if (pattern.vertex_count() > limits.pattern_vertices)
    fail(ErrorKind::SizeLimitExceeded, "pattern has " + std::to_string(pattern.vertex_count()) +
                                           " vertices (limit " + std::to_string(limits.pattern_vertices) + ")");
  if (pattern.vertex_count() > h.vertex_count()) return std::nullopt;
  if (pattern.edge_count() > 0 && pattern.uniformity() != h.uniformity()) return std::nullopt;
  return CopySearch(h, pattern).run();
}

std::size_t derived_max_degree(const Hypergraph& h, std::size_t m) {
  if (m < 1 || m > h.uniformity())
    fail(ErrorKind::OrderOutOfRange, "order " + std::to_string(m) + " outside 1.." + std::to_string(h.uniformity()));
  std::map<VertexSet, std::size_t> degree;
  std::size_t best = 0;
  for (const auto& e : h.edges())
    for (auto& s : subsets_of_size(e, m)) best = std::max(best, ++degree[std::move(s)]);
  return best;
}

}  // namespace mcover
