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
#include <optional>
#include <string>
#include <vector>

#include "mcover/bipartite.hpp"
#include "mcover/hypergraph.hpp"
#include "mcover/limits.hpp"
#include "mcover/rational.hpp"

namespace mcover {

/// A pair (b, c): indices into b_labels and c_labels.
using BcEdge = std::pair<std::uint32_t, std::uint32_t>;

/// F_1..F_p over a fixed bipartite vertex set (B, C). Each family is sorted
/// and duplicate-free.
struct EdgeFamilySeq {
  std::vector<std::string> a_labels, b_labels, c_labels;
  std::vector<std::vector<BcEdge>> families;

  std::size_t size() const { return families.size(); }
  /// Sorted union of all families.
  std::vector<BcEdge> support() const;
  SimpleGraph graph(const std::vector<BcEdge>& edges) const;
  /// Labels default to a_i, b_j, c_j.
  static EdgeFamilySeq make(std::size_t b_count, std::size_t c_count, std::vector<std::vector<BcEdge>> families);
};

/// F_i = {bc : a_i b c in H} with A = classes[a_class]; the remaining two
/// classes become B and C in order.
EdgeFamilySeq to_family(const Hypergraph& h, const PartiteStructure& parts, std::size_t a_class = 0);
Hypergraph from_family(const EdgeFamilySeq& f);

/// max |N_1 u ... u N_p| over matchings N_i in F_i.
std::size_t family_nu2(const EdgeFamilySeq& f, const Limits& limits = {});

struct FamilyCover {
  std::vector<BcEdge> z;
  std::vector<std::vector<std::string>> vertex_covers;  // per family, labels of B u C
  std::size_t size() const;
};

bool is_family_cover(const EdgeFamilySeq& f, const FamilyCover& cover);

/// min over Z of |Z| + sum tau(F_i - Z), by enumeration of Z within the
/// union of the families.
std::size_t family_tau2(const EdgeFamilySeq& f, const Limits& limits = {});

struct TunuTrace {
  std::vector<BcEdge> n_matching;     // N
  std::vector<BcEdge> l1, l2;         // L_1, L_2 after normalization
  std::size_t n = 0, ell1 = 0, ell2 = 0;
  bool swapped = false;               // families exchanged so that ell1 >= ell2
  std::optional<Rat> alpha1, alpha2;  // ell_i = (1 + alpha_i) n, absent when n = 0
  std::size_t union_size = 0;         // |L_1 u L_2|
  std::size_t lower_bound = 0;        // max(n + ell1, |L_1 u L_2|)

  std::string trace(const EdgeFamilySeq& f) const;
};

struct TunuResult {
  FamilyCover cover;
  TunuTrace trace;
};

/// Cover with Z = N and Koenig covers of F_i - N, of size n + ell1 + ell2,
/// checked against 5/3 of the matching witnessed by the trace.
TunuResult tunu_construct(const EdgeFamilySeq& f);

}  // namespace mcover
