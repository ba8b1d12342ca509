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
#include <iosfwd>
#include <map>

#include "mcover/hypergraph.hpp"
#include "mcover/rational.hpp"

namespace mcover {

enum class WeightKind { Cover, Matching };

/// Nonnegative rational weighting of m-sets (fractional m-cover) or of
/// edges (fractional m-matching). Only positive weights are stored.
class WeightFn {
 public:
  WeightFn(WeightKind kind, std::size_t order) : kind_(kind), order_(order) {}

  WeightKind kind() const { return kind_; }
  std::size_t order() const { return order_; }
  const std::map<VertexSet, Rat>& support() const { return weights_; }
  Rat total() const;
  Rat at(const VertexSet& key) const;

  /// Adds `w` (>= 0) to the weight of `key`; negative weights raise
  /// ParameterError.
  void add(const VertexSet& key, const Rat& w);
  void set(const VertexSet& key, const Rat& w);

  friend bool operator==(const WeightFn&, const WeightFn&) = default;

 private:
  WeightKind kind_;
  std::size_t order_;
  std::map<VertexSet, Rat> weights_;
};

/// Sum of the weights of the m-subsets of `edge`.
Rat block_sum(const WeightFn& cover, const VertexSet& edge);
/// Sum of the weights of the edges containing `mset`.
Rat incidence_sum(const WeightFn& matching, const VertexSet& mset);

/// Every edge of H receives block sum >= 1; keys are m-sets.
bool is_fractional_cover(const Hypergraph& h, const WeightFn& w);
/// Keys are edges of H and every m-set lies in edges of total weight <= 1.
bool is_fractional_matching(const Hypergraph& h, const WeightFn& w);

/// Lines `<comma-joined sorted tokens> <p>/<q>` in canonical key order.
void write_weight_fn(std::ostream& out, const Hypergraph& h, const WeightFn& w);
WeightFn read_weight_fn(std::istream& in, const Hypergraph& h, WeightKind kind, std::size_t order);

}  // namespace mcover
