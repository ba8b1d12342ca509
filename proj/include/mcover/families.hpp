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
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcover/hypergraph.hpp"
#include "mcover/text_format.hpp"
#include "mcover/weight_fn.hpp"

namespace mcover {

/// Example 1 family: all triples of [n] through vertex 1 (n even, n >= 4).
Hypergraph gen_star(std::size_t n);

/// All k-subsets of [n] except `removed` (each given by 1-based labels).
Hypergraph gen_complete_subsets(std::size_t n, std::size_t k, const std::vector<std::vector<std::size_t>>& removed = {});

struct ProjectivePlane {
  std::size_t order = 0;  // q
  Hypergraph lines;       // points 1..q^2+q+1, lines of size q+1
};

/// PG(2, q) over the integers mod a prime q: points and lines are the 1- and
/// 2-dimensional subspaces of F_q^3. Axioms are checked before returning.
ProjectivePlane gen_projective_plane(std::size_t q);

/// Exhaustive check: every two points on exactly one line, every two lines
/// through exactly one point, all lines of equal size.
bool satisfies_plane_axioms(const Hypergraph& plane);

/// Join of disjoint copies: edges are all unions e_1 u ... u e_m with one
/// e_i per part. Vertices of part i are renamed "<i>:<token>".
Hypergraph join(const std::vector<Hypergraph>& parts);

/// Constant weight r^-m on every edge of the join of m planes of order q
/// (r = q + 1). The result is checked to be a fractional m-matching; this
/// holds for m <= 2 only, since for m >= 3 a line of one copy together with
/// further points of that copy lies in more than r^m edges.
/// StructureError if `joined` does not have the shape of such a join or the
/// weighting is infeasible.
WeightFn join_fractional_matching(const Hypergraph& joined, std::size_t parts, std::size_t q);

/// The seven 4-edges on a..g showing g(4,2) >= 4.
Hypergraph gen_g42_witness();

struct PartiteInstance {
  Hypergraph graph;
  PartiteStructure parts;
};

/// Tripartite instance whose H^(2) is a 7-cycle; classes {a1,a2}, {b1,b2,b3}, {c1,c2}.
PartiteInstance gen_tripartite_7cycle();

/// `edge_count` distinct k-subsets of [n] drawn uniformly with XorShift64Star.
Hypergraph gen_random(std::size_t k, std::size_t n, std::size_t edge_count, std::uint64_t seed);

/// k-partite random instance; class i has tokens <letter_i>1..<letter_i>s_i.
PartiteInstance gen_random_partite(std::size_t k, const std::vector<std::size_t>& class_sizes,
                                   std::size_t edge_count, std::uint64_t seed);

SimpleGraph complete_graph(std::size_t n);
SimpleGraph cycle_graph(std::size_t n);
/// Bipartite graph with `edge_count` distinct cross edges chosen uniformly.
SimpleGraph gen_random_bipartite(std::size_t left, std::size_t right, std::size_t edge_count, std::uint64_t seed);

/// Named family with integer parameters, as used by the CLI and in search
/// records.
struct GenSpec {
  std::string family;
  std::map<std::string, std::int64_t> params;
  std::optional<std::uint64_t> seed;

  std::int64_t param(const std::string& name) const;
  std::int64_t param_or(const std::string& name, std::int64_t fallback) const;
  /// e.g. "star n=6" or "random k=3 n=7 edges=10 seed=1".
  std::string describe() const;
};

/// Families: star(n), complete(n,k), plane(q), fano-minus-line,
/// join-planes(q,parts), g42, tripartite7, random(k,n,edges), partite(k,size,edges).
Instance generate(const GenSpec& spec);

}  // namespace mcover
