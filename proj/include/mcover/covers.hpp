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
#include <string>
#include <vector>

#include "mcover/hypergraph.hpp"
#include "mcover/integral.hpp"
#include "mcover/limits.hpp"
#include "mcover/weight_fn.hpp"

// Constructive covers for hypergraphs whose m-matching number is 1. Each
// procedure checks its precondition with nu_int, validates its certificate
// and asserts the size bound it is known to satisfy; a failed assertion is
// raised as AssertionFailure rather than returned.

namespace mcover {

struct TwoEdgeCover {
  CoverCert cover;
  VertexSet e, f;           // the pair of edges the cover is built from
  std::size_t r = 0;        // max |e n f| over distinct edges
  std::size_t t = 0;        // min(r, ceil(k/2))
  VertexSet a_e, a_f;       // "head" parts whose pairs are all taken
  VertexSet b_e, b_f;       // tails joined by B_e x B_f
  std::string variant;      // "single-edge", "heads", "core"
  std::size_t bound = 0;    // C(k,2) - C(t,2)

  std::string trace(const Hypergraph& h) const;
};

/// 2-cover of size <= C(k,2) - C(t,2) for k-uniform H (k >= 3) with
/// nu^(2)(H) = 1: all pairs inside the heads A_e, A_f plus every pair across
/// the tails B_e x B_f. When the largest intersection exceeds ceil(k/2) the
/// heads are taken to be the whole intersection instead ("core").
TwoEdgeCover two_edge_cover(const Hypergraph& h, const Limits& limits = {});

struct GStarCover {
  WeightFn cover{WeightKind::Cover, 2};
  std::string variant;  // "all-meet-3" or "two-meet-2"
  VertexSet e, f;
  Rat bound;            // k^2/4 + k - 2

  std::string trace(const Hypergraph& h) const;
};

/// Fractional 2-cover for nu^(2)(H) = 1. If every two edges share >= 3
/// vertices: 1/3 on each pair of one edge. Otherwise, with e n f = {w1,w2}:
/// 1 on w1w2, 1 on each w_i v (v in e \ f), 1/4 on each v u (u in f \ e).
GStarCover gstar_upper_cover(const Hypergraph& h, const Limits& limits = {});

struct G42Cover {
  CoverCert cover;
  VertexSet e;
  std::vector<VertexSet> dispensable;
  // Set only in the "at most one dispensable pair" case.
  std::vector<VertexSet> removed;    // a, a', b, b'
  std::vector<VertexSet> witnesses;  // f, f', g, g'
  std::optional<VertexSet> x, y;     // f n f', g n g'

  std::string trace(const Hypergraph& h) const;
};

/// 2-cover of size <= 4 for a 4-uniform H with nu^(2)(H) = 1, built from the
/// indispensable pairs of the first edge e (pairs equal to e n f for some f).
G42Cover g42_cover(const Hypergraph& h, const Limits& limits = {});

struct KK1Cover {
  CoverCert cover;
  std::string variant;  // "common-removed-vertex" or "k-plus-one-vertices"
  std::optional<Vertex> removed;

  std::string trace(const Hypergraph& h) const;
};

/// (k-1)-cover for k-uniform H with nu^(k-1)(H) = 1: either every other edge
/// is e - u + v for one common u (cover {e \ u}), or H lives on k+1 vertices
/// and ceil((k+1)/2) complements of pairs covering them suffice.
KK1Cover kk1_cover(const Hypergraph& h, const Limits& limits = {});

/// PreconditionViolated unless nu^(m)(H) == 1.
void require_intersecting(const Hypergraph& h, std::size_t m, const Limits& limits);

}  // namespace mcover
