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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mcover {

/// Opaque vertex label. Ordered by (length, value) so integer-like tokens
/// sort numerically ("9" < "10").
struct VertexId {
  std::string token;

  friend bool operator==(const VertexId&, const VertexId&) = default;
  friend std::strong_ordering operator<=>(const VertexId& a, const VertexId& b) {
    if (auto c = a.token.size() <=> b.token.size(); c != 0) return c;
    return a.token.compare(b.token) <=> 0;
  }
};

/// Index of a vertex inside its host hypergraph. Index order equals token
/// order, so sorted index sets are canonical.
using Vertex = std::uint32_t;

/// Strictly increasing sequence of vertex indices; used for edges and m-sets.
using VertexSet = std::vector<Vertex>;

std::size_t intersection_size(std::span<const Vertex> a, std::span<const Vertex> b);
bool is_subset(std::span<const Vertex> small, std::span<const Vertex> big);
VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b);

/// Binomial coefficient; throws ParameterError on overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// All m-subsets of `items` in lexicographic order.
std::vector<VertexSet> subsets_of_size(std::span<const Vertex> items, std::size_t m);

/// k-uniform hypergraph over opaque vertex tokens. Immutable once built;
/// vertices and edges are kept sorted and duplicate-free.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Builds from token lists. Duplicate edges collapse; repeated tokens
  /// inside an edge or mixed edge sizes raise ParseError. `extra_vertices`
  /// adds isolated vertices. With no edges the uniformity must be given.
  static Hypergraph from_tokens(const std::vector<std::vector<std::string>>& edges,
                                const std::vector<std::string>& extra_vertices = {},
                                std::optional<std::size_t> uniformity = std::nullopt);

  /// Same as from_tokens but over already-indexed vertices of `vertices`.
  static Hypergraph from_indexed(std::vector<VertexId> vertices, std::vector<VertexSet> edges,
                                 std::size_t uniformity);

  std::size_t uniformity() const { return uniformity_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<VertexSet>& edges() const { return edges_; }
  const VertexSet& edge(std::size_t i) const { return edges_[i]; }
  const std::string& token(Vertex v) const { return vertices_[v].token; }

  std::optional<Vertex> find_vertex(std::string_view token) const;
  std::optional<std::size_t> find_edge(std::span<const Vertex> edge) const;
  bool has_edge(std::span<const Vertex> edge) const { return find_edge(edge).has_value(); }

  /// Maps tokens to a sorted index set; unknown tokens raise
  /// InvalidCertificateReference.
  VertexSet to_set(const std::vector<std::string>& tokens) const;
  std::vector<std::string> to_tokens(std::span<const Vertex> set) const;
  /// Tokens of `set` joined by `sep`, e.g. "1,2,5".
  std::string format_set(std::span<const Vertex> set, char sep = ',') const;

  /// Edges as token lists, in canonical order.
  std::vector<std::vector<std::string>> token_edges() const;

  /// Copy keeping only the edges whose index satisfies `keep`.
  template <class Pred>
  Hypergraph filter_edges(Pred keep) const {
    std::vector<VertexSet> kept;
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (keep(i)) kept.push_back(edges_[i]);
    return from_indexed(vertices_, std::move(kept), uniformity_);
  }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::vector<VertexId> vertices_;
  std::vector<VertexSet> edges_;
  std::size_t uniformity_ = 0;
};

/// Vertex classes V_1..V_k of a k-partite hypergraph, as index sets of the
/// host hypergraph.
struct PartiteStructure {
  std::vector<VertexSet> classes;

  /// StructureError unless the classes partition V(H) and every edge meets
  /// every class exactly once.
  void validate(const Hypergraph& h) const;
  bool is_valid_for(const Hypergraph& h) const;
};

/// Simple undirected graph with optional bipartition. Vertices are 0..n-1
/// with printable labels; edges are stored as (u, v) with u < v.
class SimpleGraph {
 public:
  using EdgeT = std::pair<std::uint32_t, std::uint32_t>;

  SimpleGraph() = default;
  /// Labels default to "1".."n". Loops and repeated edges raise ParameterError.
  SimpleGraph(std::size_t n, std::vector<EdgeT> edges, std::vector<std::string> labels = {});

  /// Bipartite graph on |left| + |right| vertices; edge (b, c) joins left b
  /// with right c. Left vertices come first in the index order.
  static SimpleGraph bipartite(std::size_t left, std::size_t right,
                               const std::vector<EdgeT>& cross_edges,
                               std::vector<std::string> labels = {});

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<EdgeT>& edges() const { return edges_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool adjacent(std::uint32_t u, std::uint32_t v) const;

  bool has_bipartition() const { return side_.has_value(); }
  /// side()[v] is 0 for the B class and 1 for the C class.
  const std::vector<std::uint8_t>& side() const;

 private:
  std::vector<std::string> labels_;
  std::vector<EdgeT> edges_;
  std::vector<std::vector<bool>> adjacency_;
  std::optional<std::vector<std::uint8_t>> side_;
};

}  // namespace mcover
