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
#include <string>
#include <vector>

#include "mcover/hypergraph.hpp"
#include "mcover/limits.hpp"
#include "mcover/weight_fn.hpp"

namespace mcover {

struct MimicAnalysis {
  std::size_t k = 0;
  std::vector<VertexSet> matching;           // M, maximum (k-1)-matching
  std::vector<std::size_t> with_mimic;       // indices into M forming M_1
  std::vector<std::size_t> without_mimic;    // M_2
  std::vector<std::vector<VertexSet>> mimickers;  // F_i, parallel to with_mimic
  std::vector<VertexSet> common;             // p_i, parallel to with_mimic

  std::size_t n() const { return matching.size(); }
  std::size_t t() const { return with_mimic.size(); }
  std::string trace(const Hypergraph& h) const;
};

struct MimicResult {
  WeightFn cover{WeightKind::Cover, 0};
  bool integral = false;  // true when g2 was chosen
  Rat g1_total, g2_total;
  Rat bound;              // k^2 n / (2k - 1)
  MimicAnalysis analysis;
};

/// Both covers g1 and g2 are built and checked; the smaller is returned.
MimicResult mimic_cover(const Hypergraph& h, const PartiteStructure& parts, const Limits& limits = {});

}  // namespace mcover
