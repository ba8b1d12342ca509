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

#include "mcover/bipartite.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "mcover/error.hpp"

namespace mcover {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

struct Sides {
  std::vector<std::vector<std::uint32_t>> adj;  // B vertex -> C neighbours, ascending
  std::vector<std::uint32_t> b_vertices;
};

Sides split(const SimpleGraph& g) {
  const auto& side = g.side();
  Sides s;
  s.adj.resize(g.vertex_count());
  for (auto [u, v] : g.edges()) {
    if (side[u] == side[v]) fail(ErrorKind::StructureError, "edge inside one side of the bipartition");
    if (side[u] == 0) {
      s.adj[u].push_back(v);
    } else {
      s.adj[v].push_back(u);
    }
  }
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    std::sort(s.adj[v].begin(), s.adj[v].end());
    if (side[v] == 0) s.b_vertices.push_back(v);
  }
  return s;
}

bool augment(const Sides& s, std::uint32_t b, std::vector<std::uint32_t>& mate, std::vector<bool>& seen) {
  for (std::uint32_t c : s.adj[b]) {
    if (seen[c]) continue;
    seen[c] = true;
    if (mate[c] == kNone || augment(s, mate[c], mate, seen)) {
      mate[c] = b;
      mate[b] = c;
      return true;
    }
  }
  return false;
}

}  // namespace

BipartiteDuality bip_matching_cover(const SimpleGraph& g) {
  const Sides s = split(g);
  const auto n = g.vertex_count();
  std::vector<std::uint32_t> mate(n, kNone);
  for (std::uint32_t b : s.b_vertices) {
    std::vector<bool> seen(n, false);
    augment(s, b, mate, seen);
  }

  std::vector<bool> reached(n, false);
  std::queue<std::uint32_t> queue;
  for (std::uint32_t b : s.b_vertices) {
    if (mate[b] == kNone) {
      reached[b] = true;
      queue.push(b);
    }
  }
  while (!queue.empty()) {
    std::uint32_t b = queue.front();
    queue.pop();
    for (std::uint32_t c : s.adj[b]) {
      if (reached[c] || mate[b] == c) continue;
      reached[c] = true;
      if (mate[c] != kNone && !reached[mate[c]]) {
        reached[mate[c]] = true;
        queue.push(mate[c]);
      }
    }
  }

  BipartiteDuality out;
  const auto& side = g.side();
  for (std::uint32_t v = 0; v < n; ++v) {
    if (side[v] == 0 && mate[v] != kNone) out.matching.emplace_back(std::min(v, mate[v]), std::max(v, mate[v]));
    if ((side[v] == 0 && !reached[v]) || (side[v] == 1 && reached[v])) out.cover.push_back(v);
  }
  std::sort(out.matching.begin(), out.matching.end());
  return out;
}

std::size_t bipartite_cover_number(const SimpleGraph& g) { return bip_matching_cover(g).matching.size(); }

std::vector<GraphEdge> p_factor_max(const SimpleGraph& g, std::size_t p) {
  if (p < 1) fail(ErrorKind::ParameterError, "degree bound must be at least 1");
  const Sides s = split(g);
  const std::size_t n = g.vertex_count();
  const std::size_t source = n, sink = n + 1;

  struct Arc {
    std::size_t to;
    std::size_t rev;
    std::size_t cap;
  };
  std::vector<std::vector<Arc>> net(n + 2);
  auto add_arc = [&](std::size_t from, std::size_t to, std::size_t cap) {
    net[from].push_back({to, net[to].size(), cap});
    net[to].push_back({from, net[from].size() - 1, 0});
  };
  const auto& side = g.side();
  for (std::uint32_t v = 0; v < n; ++v) {
    if (side[v] == 0) {
      add_arc(source, v, p);
    } else {
      add_arc(v, sink, p);
    }
  }
  for (std::uint32_t b : s.b_vertices)
    for (std::uint32_t c : s.adj[b]) add_arc(b, c, 1);

  // Edmonds-Karp; BFS in arc order keeps the result deterministic.
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> parent(n + 2, {kNone, 0});
    parent[source] = {source, 0};
    std::queue<std::size_t> queue;
    queue.push(source);
    while (!queue.empty() && parent[sink].first == kNone) {
      auto u = queue.front();
      queue.pop();
      for (std::size_t i = 0; i < net[u].size(); ++i) {
        const Arc& a = net[u][i];
        if (a.cap > 0 && parent[a.to].first == kNone) {
          parent[a.to] = {u, i};
          queue.push(a.to);
        }
      }
    }
    if (parent[sink].first == kNone) break;
    std::size_t push = std::numeric_limits<std::size_t>::max();
    for (std::size_t v = sink; v != source; v = parent[v].first)
      push = std::min(push, net[parent[v].first][parent[v].second].cap);
    for (std::size_t v = sink; v != source; v = parent[v].first) {
      Arc& a = net[parent[v].first][parent[v].second];
      a.cap -= push;
      net[a.to][a.rev].cap += push;
    }
  }

  std::vector<GraphEdge> factor;
  for (std::uint32_t b : s.b_vertices)
    for (const Arc& a : net[b])
      if (a.to < n && side[a.to] == 1 && a.cap == 0)
        factor.emplace_back(std::min<std::uint32_t>(b, static_cast<std::uint32_t>(a.to)),
                            std::max<std::uint32_t>(b, static_cast<std::uint32_t>(a.to)));
  std::sort(factor.begin(), factor.end());
  return factor;
}

ZMinimum min_z_value(const SimpleGraph& g, std::size_t p, const Limits& limits) {
  const auto& edges = g.edges();
  if (edges.size() > limits.bruteforce_edges)
    fail(ErrorKind::SizeLimitExceeded, "min_z_value over " + std::to_string(edges.size()) + " edges (limit " +
                                           std::to_string(limits.bruteforce_edges) + ")");
  const auto& side = g.side();
  std::size_t left = 0, right = 0;
  std::vector<std::uint32_t> pos(g.vertex_count());
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
    pos[v] = static_cast<std::uint32_t>(side[v] == 0 ? left++ : right++);

  ZMinimum best;
  bool have = false;
  const std::uint64_t subsets = std::uint64_t{1} << edges.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::vector<GraphEdge> z, rest;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto [u, v] = edges[i];
      if (mask >> i & 1) {
        z.push_back(edges[i]);
      } else {
        rest.emplace_back(side[u] == 0 ? pos[u] : pos[v], side[u] == 0 ? pos[v] : pos[u]);
      }
    }
    if (have && z.size() >= best.value) continue;
    const std::size_t value = z.size() + p * bipartite_cover_number(SimpleGraph::bipartite(left, right, rest));
    if (!have || value < best.value) {
      best = {value, std::move(z)};
      have = true;
    }
  }
  return best;
}

}  // namespace mcover
