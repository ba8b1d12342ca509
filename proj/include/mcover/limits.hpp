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
#include <string_view>

namespace mcover {

/// Size guards for the exact solvers. Defaults suit desk-scale instances;
/// `MCOVER_LIMITS="nonzeros=50000,bruteforce_edges=22"` overrides them.
struct Limits {
  std::size_t lp_nonzeros = 20000;
  std::size_t bruteforce_edges = 20;      // min_z_value, family_tau2
  std::size_t pattern_vertices = 9;       // contains_copy
  std::size_t derived_incidences = 200000;  // derive() output size
  std::size_t search_nodes = 50'000'000;  // branch-and-bound nodes per solve
  std::size_t lp_bound_nonzeros = 4000;   // use the LP root bound in tau_int below this

  /// Parses a comma-separated `key=value` list on top of `base`.
  /// Unknown keys or malformed values raise ParameterError.
  static Limits parse(std::string_view spec, Limits base);
  static Limits parse(std::string_view spec);
  /// Defaults overridden by the MCOVER_LIMITS environment variable, if set.
  static Limits from_env();
};

}  // namespace mcover
