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

#include "mcover/families.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "mcover/error.hpp"
#include "mcover/prng.hpp"

namespace mcover {

namespace {

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

bool is_prime(std::size_t q) {
  if (q < 2) return false;
  for (std::size_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

// Index vectors 0..count-1 in a uniformly random order prefix of length take.
std::vector<std::size_t> sample_indices(std::size_t count, std::size_t take, XorShift64Star& rng) {
  std::vector<std::size_t> idx(count);
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t i = 0; i < take; ++i) std::swap(idx[i], idx[i + rng.below(count - i)]);
  idx.resize(take);
  return idx;
}

constexpr std::size_t kMaxEnumerated = 2'000'000;

}  // namespace

Hypergraph gen_star(std::size_t n) {
  if (n < 4 || n % 2 != 0) fail(ErrorKind::ParameterError, "star needs an even n >= 4");
  std::vector<std::vector<std::string>> edges;
  for (std::size_t a = 2; a <= n; ++a)
    for (std::size_t b = a + 1; b <= n; ++b) edges.push_back({"1", std::to_string(a), std::to_string(b)});
  return Hypergraph::from_tokens(edges, numbered(n), 3);
}

Hypergraph gen_complete_subsets(std::size_t n, std::size_t k, const std::vector<std::vector<std::size_t>>& removed) {
  if (k < 1 || k > n) fail(ErrorKind::ParameterError, "complete family needs 1 <= k <= n");
  if (binomial(n, k) > kMaxEnumerated) fail(ErrorKind::ParameterError, "too many k-subsets");
  std::set<VertexSet> drop;
  for (const auto& r : removed) {
    VertexSet s;
    for (std::size_t label : r) {
      if (label < 1 || label > n) fail(ErrorKind::ParameterError, "removed edge label out of range");
      s.push_back(static_cast<Vertex>(label - 1));
    }
    std::sort(s.begin(), s.end());
    if (s.size() != k || std::adjacent_find(s.begin(), s.end()) != s.end())
      fail(ErrorKind::ParameterError, "removed edge is not a k-subset");
    drop.insert(s);
  }
  VertexSet all(n);
  std::iota(all.begin(), all.end(), 0);
  std::vector<VertexSet> edges;
  for (auto& s : subsets_of_size(all, k))
    if (!drop.count(s)) edges.push_back(std::move(s));
  std::vector<VertexId> vertices;
  for (auto& t : numbered(n)) vertices.push_back({t});
  return Hypergraph::from_indexed(std::move(vertices), std::move(edges), k);
}

ProjectivePlane gen_projective_plane(std::size_t q) {
  if (!is_prime(q)) fail(ErrorKind::ParameterError, "plane order must be prime, got " + std::to_string(q));
  // Normalized representatives: first nonzero coordinate equals 1.
  std::vector<std::array<std::size_t, 3>> points;
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) points.push_back({1, a, b});
  for (std::size_t a = 0; a < q; ++a) points.push_back({0, 1, a});
  points.push_back({0, 0, 1});

  std::vector<std::vector<std::string>> lines;
  for (const auto& l : points) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto& p = points[i];
      if ((l[0] * p[0] + l[1] * p[1] + l[2] * p[2]) % q == 0) line.push_back(std::to_string(i + 1));
    }
    lines.push_back(std::move(line));
  }
  ProjectivePlane plane{q, Hypergraph::from_tokens(lines, numbered(points.size()), q + 1)};
  if (!satisfies_plane_axioms(plane.lines))
    fail(ErrorKind::InternalContradiction, "projective plane axioms failed for q=" + std::to_string(q));
  return plane;
}

bool satisfies_plane_axioms(const Hypergraph& plane) {
  const auto& lines = plane.edges();
  if (lines.size() != plane.vertex_count()) return false;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (intersection_size(lines[i], lines[j]) != 1) return false;
  for (Vertex a = 0; a < plane.vertex_count(); ++a)
    for (Vertex b = a + 1; b < plane.vertex_count(); ++b) {
      std::size_t through = 0;
      for (const auto& l : lines)
        if (std::binary_search(l.begin(), l.end(), a) && std::binary_search(l.begin(), l.end(), b)) ++through;
      if (through != 1) return false;
    }
  return true;
}

Hypergraph join(const std::vector<Hypergraph>& parts) {
  if (parts.empty()) fail(ErrorKind::ParameterError, "join of no parts");
  std::vector<std::vector<std::vector<std::string>>> renamed;
  std::vector<std::string> vertices;
  std::size_t k = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].edge_count() == 0) fail(ErrorKind::ParameterError, "join part " + std::to_string(i + 1) + " is empty");
    const std::string prefix = std::to_string(i + 1) + ":";
    for (const auto& v : parts[i].vertices()) vertices.push_back(prefix + v.token);
    std::vector<std::vector<std::string>> edges;
    for (auto e : parts[i].token_edges()) {
      for (auto& t : e) t = prefix + t;
      edges.push_back(std::move(e));
    }
    renamed.push_back(std::move(edges));
    k += parts[i].uniformity();
  }
  std::uint64_t total = 1;
  for (const auto& r : renamed) {
    total *= r.size();
    if (total > kMaxEnumerated) fail(ErrorKind::ParameterError, "join has too many edges");
  }
  std::vector<std::vector<std::string>> edges;
  std::vector<std::size_t> pick(renamed.size(), 0);
  while (true) {
    std::vector<std::string> e;
    for (std::size_t i = 0; i < renamed.size(); ++i) e.insert(e.end(), renamed[i][pick[i]].begin(), renamed[i][pick[i]].end());
    edges.push_back(std::move(e));
    std::size_t i = renamed.size();
    while (i > 0 && ++pick[i - 1] == renamed[i - 1].size()) pick[--i] = 0;
    if (i == 0) break;
  }
  return Hypergraph::from_tokens(edges, vertices, k);
}

WeightFn join_fractional_matching(const Hypergraph& joined, std::size_t parts, std::size_t q) {
  const std::size_t r = q + 1;
  const std::size_t points = q * q + q + 1;
  std::uint64_t expected_edges = 1;
  for (std::size_t i = 0; i < parts; ++i) expected_edges *= points;
  if (parts == 0 || joined.uniformity() != parts * r || joined.edge_count() != expected_edges ||
      joined.vertex_count() != parts * points)
    fail(ErrorKind::StructureError, "hypergraph is not a join of " + std::to_string(parts) + " planes of order " +
                                        std::to_string(q));
  BigInt denom = 1;
  for (std::size_t i = 0; i < parts; ++i) denom *= static_cast<unsigned long>(r);
  const Rat weight(BigInt(1), denom);
  WeightFn f(WeightKind::Matching, parts);
  for (const auto& e : joined.edges()) f.set(e, weight);
  if (!is_fractional_matching(joined, f))
    fail(ErrorKind::StructureError, "constant weighting overloads some m-set");
  return f;
}

Hypergraph gen_g42_witness() {
  const std::vector<std::string> words = {"abcd", "abef", "cdef", "aceg", "bdeg", "adfg", "bcfg"};
  std::vector<std::vector<std::string>> edges;
  for (const auto& w : words) {
    std::vector<std::string> e;
    for (char c : w) e.emplace_back(1, c);
    edges.push_back(std::move(e));
  }
  return Hypergraph::from_tokens(edges);
}

PartiteInstance gen_tripartite_7cycle() {
  const std::vector<std::vector<std::string>> edges = {
      {"a1", "b1", "c1"}, {"a1", "b1", "c2"}, {"a1", "b2", "c2"}, {"a2", "b2", "c2"},
      {"a2", "b2", "c1"}, {"a2", "b3", "c1"}, {"a1", "b3", "c1"},
  };
  PartiteInstance out{Hypergraph::from_tokens(edges), {}};
  for (const auto& cls : std::vector<std::vector<std::string>>{{"a1", "a2"}, {"b1", "b2", "b3"}, {"c1", "c2"}})
    out.parts.classes.push_back(out.graph.to_set(cls));
  out.parts.validate(out.graph);
  return out;
}

Hypergraph gen_random(std::size_t k, std::size_t n, std::size_t edge_count, std::uint64_t seed) {
  if (k < 1 || k > n) fail(ErrorKind::ParameterError, "random family needs 1 <= k <= n");
  const std::uint64_t total = binomial(n, k);
  if (total > kMaxEnumerated) fail(ErrorKind::ParameterError, "too many k-subsets to sample from");
  if (edge_count > total)
    fail(ErrorKind::ParameterError, "edge count " + std::to_string(edge_count) + " exceeds C(n,k) = " + std::to_string(total));
  VertexSet all(n);
  std::iota(all.begin(), all.end(), 0);
  const auto candidates = subsets_of_size(all, k);
  XorShift64Star rng(seed);
  std::vector<VertexSet> edges;
  for (std::size_t i : sample_indices(candidates.size(), edge_count, rng)) edges.push_back(candidates[i]);
  std::vector<VertexId> vertices;
  for (auto& t : numbered(n)) vertices.push_back({t});
  return Hypergraph::from_indexed(std::move(vertices), std::move(edges), k);
}

PartiteInstance gen_random_partite(std::size_t k, const std::vector<std::size_t>& class_sizes, std::size_t edge_count,
                                   std::uint64_t seed) {
  if (k < 1 || k > 26 || class_sizes.size() != k)
    fail(ErrorKind::ParameterError, "partite family needs 1 <= k <= 26 class sizes");
  std::uint64_t total = 1;
  for (std::size_t s : class_sizes) {
    if (s == 0) fail(ErrorKind::ParameterError, "empty vertex class");
    total *= s;
    if (total > kMaxEnumerated) fail(ErrorKind::ParameterError, "too many transversals to sample from");
  }
  if (edge_count > total)
    fail(ErrorKind::ParameterError, "edge count exceeds the number of transversals " + std::to_string(total));

  std::vector<std::vector<std::string>> classes(k);
  std::vector<std::string> all_tokens;
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t i = 1; i <= class_sizes[c]; ++i) {
      classes[c].push_back(std::string(1, static_cast<char>('a' + c)) + std::to_string(i));
      all_tokens.push_back(classes[c].back());
    }
  XorShift64Star rng(seed);
  std::vector<std::vector<std::string>> edges;
  for (std::size_t code : sample_indices(total, edge_count, rng)) {
    std::vector<std::string> e;
    for (std::size_t c = 0; c < k; ++c) {
      e.push_back(classes[c][code % class_sizes[c]]);
      code /= class_sizes[c];
    }
    edges.push_back(std::move(e));
  }
  PartiteInstance out{Hypergraph::from_tokens(edges, all_tokens, k), {}};
  for (const auto& cls : classes) out.parts.classes.push_back(out.graph.to_set(cls));
  out.parts.validate(out.graph);
  return out;
}

SimpleGraph complete_graph(std::size_t n) {
  std::vector<SimpleGraph::EdgeT> edges;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph cycle_graph(std::size_t n) {
  if (n < 3) fail(ErrorKind::ParameterError, "cycle needs n >= 3");
  std::vector<SimpleGraph::EdgeT> edges;
  for (std::uint32_t u = 0; u < n; ++u) edges.emplace_back(u, static_cast<std::uint32_t>((u + 1) % n));
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph gen_random_bipartite(std::size_t left, std::size_t right, std::size_t edge_count, std::uint64_t seed) {
  const std::size_t total = left * right;
  if (edge_count > total) fail(ErrorKind::ParameterError, "edge count exceeds |B| * |C|");
  XorShift64Star rng(seed);
  std::vector<SimpleGraph::EdgeT> edges;
  for (std::size_t code : sample_indices(total, edge_count, rng))
    edges.emplace_back(static_cast<std::uint32_t>(code / right), static_cast<std::uint32_t>(code % right));
  return SimpleGraph::bipartite(left, right, edges);
}

std::int64_t GenSpec::param(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end()) fail(ErrorKind::ParameterError, "family '" + family + "' needs parameter " + name);
  return it->second;
}

std::int64_t GenSpec::param_or(const std::string& name, std::int64_t fallback) const {
  auto it = params.find(name);
  return it == params.end() ? fallback : it->second;
}

std::string GenSpec::describe() const {
  std::ostringstream out;
  out << family;
  for (const auto& [k, v] : params) out << ' ' << k << '=' << v;
  if (seed) out << " seed=" << *seed;
  return out.str();
}

namespace {

std::size_t positive(std::int64_t v, const std::string& name) {
  if (v < 0) fail(ErrorKind::ParameterError, name + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

}  // namespace

Instance generate(const GenSpec& spec) {
  const auto& f = spec.family;
  const std::uint64_t seed = spec.seed.value_or(1);
  if (f == "star") return {gen_star(positive(spec.param("n"), "n")), std::nullopt, {}};
  if (f == "complete") return {gen_complete_subsets(positive(spec.param("n"), "n"), positive(spec.param("k"), "k")), std::nullopt, {}};
  if (f == "plane") return {gen_projective_plane(positive(spec.param("q"), "q")).lines, std::nullopt, {}};
  if (f == "fano-minus-line") {
    const auto fano = gen_projective_plane(2).lines;
    return {fano.filter_edges([](std::size_t i) { return i != 0; }), std::nullopt, {}};
  }
  if (f == "join-planes") {
    const auto plane = gen_projective_plane(positive(spec.param("q"), "q")).lines;
    const std::size_t count = positive(spec.param_or("parts", 2), "parts");
    return {join(std::vector<Hypergraph>(count, plane)), std::nullopt, {}};
  }
  if (f == "g42") return {gen_g42_witness(), std::nullopt, {}};
  if (f == "tripartite7") {
    auto inst = gen_tripartite_7cycle();
    return {inst.graph, inst.parts, {"A", "B", "C"}};
  }
  if (f == "random")
    return {gen_random(positive(spec.param("k"), "k"), positive(spec.param("n"), "n"),
                       positive(spec.param("edges"), "edges"), seed),
            std::nullopt, {}};
  if (f == "partite") {
    const std::size_t k = positive(spec.param("k"), "k");
    std::vector<std::size_t> sizes;
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= k; ++i) {
      sizes.push_back(positive(spec.param_or("s" + std::to_string(i), spec.param_or("size", 0)), "class size"));
      names.push_back(std::string(1, static_cast<char>('A' + i - 1)));
    }
    auto inst = gen_random_partite(k, sizes, positive(spec.param("edges"), "edges"), seed);
    return {inst.graph, inst.parts, names};
  }
  fail(ErrorKind::ParameterError, "unknown family '" + f + "'");
}

}  // namespace mcover
