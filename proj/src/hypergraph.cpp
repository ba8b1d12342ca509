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

#include "mcover/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <map>
#include <set>

#include "mcover/error.hpp"
#include "mcover/limits.hpp"

namespace mcover {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OrderOutOfRange: return "order-out-of-range";
    case ErrorKind::InvalidCertificateReference: return "invalid-certificate-reference";
    case ErrorKind::MalformedCover: return "malformed-cover";
    case ErrorKind::SizeLimitExceeded: return "size-limit-exceeded";
    case ErrorKind::MalformedProblem: return "malformed-problem";
    case ErrorKind::InvalidCertificate: return "invalid-certificate";
    case ErrorKind::StructureError: return "structure-error";
    case ErrorKind::ParameterError: return "parameter-error";
    case ErrorKind::PreconditionViolated: return "precondition-violated";
    case ErrorKind::InternalContradiction: return "internal-contradiction";
    case ErrorKind::AssertionFailure: return "assertion-failure";
    case ErrorKind::ParseError: return "parse-error";
  }
  return "unknown";
}

Limits Limits::parse(std::string_view spec, Limits base) {
  static const std::map<std::string, std::size_t Limits::*, std::less<>> fields = {
      {"nonzeros", &Limits::lp_nonzeros},
      {"bruteforce_edges", &Limits::bruteforce_edges},
      {"pattern_vertices", &Limits::pattern_vertices},
      {"derived_incidences", &Limits::derived_incidences},
      {"search_nodes", &Limits::search_nodes},
      {"lp_bound_nonzeros", &Limits::lp_bound_nonzeros},
  };
  while (!spec.empty()) {
    auto comma = spec.find(',');
    auto item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) fail(ErrorKind::ParameterError, "limit entry without '=': " + std::string(item));
    auto key = item.substr(0, eq);
    auto value = item.substr(eq + 1);
    auto it = fields.find(key);
    if (it == fields.end()) fail(ErrorKind::ParameterError, "unknown limit: " + std::string(key));
    std::size_t parsed = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc{} || ptr != value.data() + value.size())
      fail(ErrorKind::ParameterError, "bad limit value: " + std::string(item));
    base.*(it->second) = parsed;
  }
  return base;
}

Limits Limits::parse(std::string_view spec) { return parse(spec, Limits{}); }

Limits Limits::from_env() {
  const char* env = std::getenv("MCOVER_LIMITS");
  return env ? parse(env) : Limits{};
}

std::size_t intersection_size(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

bool is_subset(std::span<const Vertex> small, std::span<const Vertex> big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step
    std::uint64_t factor = n - k + i;
    if (result > std::numeric_limits<std::uint64_t>::max() / factor)
      fail(ErrorKind::ParameterError, "binomial overflow");
    result = result * factor / i;
  }
  return result;
}

std::vector<VertexSet> subsets_of_size(std::span<const Vertex> items, std::size_t m) {
  std::vector<VertexSet> out;
  if (m > items.size()) return out;
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  while (true) {
    VertexSet s(m);
    for (std::size_t i = 0; i < m; ++i) s[i] = items[idx[i]];
    out.push_back(std::move(s));
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == items.size() - m + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

Hypergraph Hypergraph::from_tokens(const std::vector<std::vector<std::string>>& edges,
                                   const std::vector<std::string>& extra_vertices,
                                   std::optional<std::size_t> uniformity) {
  std::set<VertexId> vertex_set;
  for (const auto& e : edges)
    for (const auto& t : e) vertex_set.insert(VertexId{t});
  for (const auto& t : extra_vertices) vertex_set.insert(VertexId{t});

  std::vector<VertexId> vertices(vertex_set.begin(), vertex_set.end());
  auto index_of = [&](const std::string& t) {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), VertexId{t});
    return static_cast<Vertex>(it - vertices.begin());
  };

  std::size_t k = uniformity.value_or(edges.empty() ? 0 : edges.front().size());
  if (k == 0) fail(ErrorKind::ParseError, "uniformity must be at least 1");
  std::vector<VertexSet> indexed;
  indexed.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.size() != k)
      fail(ErrorKind::ParseError, "mixed edge sizes: expected " + std::to_string(k) + ", got " +
                                      std::to_string(e.size()));
    VertexSet s;
    for (const auto& t : e) s.push_back(index_of(t));
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      fail(ErrorKind::ParseError, "repeated vertex inside an edge");
    indexed.push_back(std::move(s));
  }
  return from_indexed(std::move(vertices), std::move(indexed), k);
}

Hypergraph Hypergraph::from_indexed(std::vector<VertexId> vertices, std::vector<VertexSet> edges,
                                    std::size_t uniformity) {
  if (uniformity == 0) fail(ErrorKind::ParseError, "uniformity must be at least 1");
  if (!std::is_sorted(vertices.begin(), vertices.end()) ||
      std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    fail(ErrorKind::StructureError, "vertex list must be strictly increasing");
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    if (e.size() != uniformity) fail(ErrorKind::ParseError, "edge size differs from uniformity");
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      fail(ErrorKind::ParseError, "repeated vertex inside an edge");
    if (!e.empty() && e.back() >= vertices.size())
      fail(ErrorKind::StructureError, "edge references unknown vertex");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  Hypergraph h;
  h.vertices_ = std::move(vertices);
  h.edges_ = std::move(edges);
  h.uniformity_ = uniformity;
  return h;
}

std::optional<Vertex> Hypergraph::find_vertex(std::string_view token) const {
  VertexId probe{std::string(token)};
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), probe);
  if (it == vertices_.end() || *it != probe) return std::nullopt;
  return static_cast<Vertex>(it - vertices_.begin());
}

std::optional<std::size_t> Hypergraph::find_edge(std::span<const Vertex> edge) const {
  VertexSet probe(edge.begin(), edge.end());
  auto it = std::lower_bound(edges_.begin(), edges_.end(), probe);
  if (it == edges_.end() || *it != probe) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

VertexSet Hypergraph::to_set(const std::vector<std::string>& tokens) const {
  VertexSet s;
  for (const auto& t : tokens) {
    auto v = find_vertex(t);
    if (!v) fail(ErrorKind::InvalidCertificateReference, "unknown vertex token '" + t + "'");
    s.push_back(*v);
  }
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    fail(ErrorKind::InvalidCertificateReference, "repeated vertex in set");
  return s;
}

std::vector<std::string> Hypergraph::to_tokens(std::span<const Vertex> set) const {
  std::vector<std::string> out;
  out.reserve(set.size());
  for (Vertex v : set) out.push_back(vertices_.at(v).token);
  return out;
}

std::string Hypergraph::format_set(std::span<const Vertex> set, char sep) const {
  std::string out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += sep;
    out += vertices_.at(set[i]).token;
  }
  return out;
}

std::vector<std::vector<std::string>> Hypergraph::token_edges() const {
  std::vector<std::vector<std::string>> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(to_tokens(e));
  return out;
}

void PartiteStructure::validate(const Hypergraph& h) const {
  std::vector<int> owner(h.vertex_count(), -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (Vertex v : classes[c]) {
      if (v >= h.vertex_count()) fail(ErrorKind::StructureError, "class references unknown vertex");
      if (owner[v] != -1) fail(ErrorKind::StructureError, "vertex " + h.token(v) + " in two classes");
      owner[v] = static_cast<int>(c);
    }
  }
  for (std::size_t v = 0; v < owner.size(); ++v)
    if (owner[v] == -1) fail(ErrorKind::StructureError, "vertex " + h.token(static_cast<Vertex>(v)) + " in no class");
  if (classes.size() != h.uniformity())
    fail(ErrorKind::StructureError, "class count differs from uniformity");
  for (const auto& e : h.edges()) {
    std::vector<int> hits(classes.size(), 0);
    for (Vertex v : e) ++hits[owner[v]];
    for (int hcount : hits)
      if (hcount != 1) fail(ErrorKind::StructureError, "edge " + h.format_set(e) + " does not meet every class once");
  }
}

bool PartiteStructure::is_valid_for(const Hypergraph& h) const {
  try {
    validate(h);
    return true;
  } catch (const Error&) {
    return false;
  }
}

SimpleGraph::SimpleGraph(std::size_t n, std::vector<EdgeT> edges, std::vector<std::string> labels)
    : labels_(std::move(labels)), adjacency_(n, std::vector<bool>(n, false)) {
  if (labels_.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i + 1));
  }
  if (labels_.size() != n) fail(ErrorKind::ParameterError, "label count differs from vertex count");
  for (auto [u, v] : edges) {
    if (u == v) fail(ErrorKind::ParameterError, "loop at vertex " + labels_[u]);
    if (u >= n || v >= n) fail(ErrorKind::ParameterError, "edge endpoint out of range");
    if (u > v) std::swap(u, v);
    if (adjacency_[u][v]) fail(ErrorKind::ParameterError, "repeated edge");
    adjacency_[u][v] = adjacency_[v][u] = true;
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
}

SimpleGraph SimpleGraph::bipartite(std::size_t left, std::size_t right,
                                   const std::vector<EdgeT>& cross_edges,
                                   std::vector<std::string> labels) {
  if (labels.empty()) {
    for (std::size_t i = 0; i < left; ++i) labels.push_back("b" + std::to_string(i + 1));
    for (std::size_t i = 0; i < right; ++i) labels.push_back("c" + std::to_string(i + 1));
  }
  std::vector<EdgeT> edges;
  for (auto [b, c] : cross_edges) {
    if (b >= left || c >= right) fail(ErrorKind::ParameterError, "bipartite edge endpoint out of range");
    edges.emplace_back(b, static_cast<std::uint32_t>(left + c));
  }
  SimpleGraph g(left + right, std::move(edges), std::move(labels));
  std::vector<std::uint8_t> side(left + right, 0);
  for (std::size_t i = left; i < left + right; ++i) side[i] = 1;
  g.side_ = std::move(side);
  return g;
}

bool SimpleGraph::adjacent(std::uint32_t u, std::uint32_t v) const { return adjacency_.at(u).at(v); }

const std::vector<std::uint8_t>& SimpleGraph::side() const {
  if (!side_) fail(ErrorKind::StructureError, "graph has no bipartition");
  return *side_;
}

}  // namespace mcover
