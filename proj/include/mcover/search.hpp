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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mcover/hypergraph.hpp"
#include "mcover/limits.hpp"
#include "mcover/rational.hpp"

namespace mcover {

struct SearchOptions {
  std::size_t k = 3;
  std::size_t m = 2;
  std::size_t n = 6;
  std::size_t iterations = 1000;
  std::uint64_t seed = 1;
  bool exhaustive = false;
  Limits limits;
};

struct SearchRecord {
  std::string spec;      // how to regenerate the instance
  std::uint64_t hash = 0;
  std::size_t tau = 0, nu = 0;
  Rat ratio;             // tau / nu
  std::size_t iteration = 0;
  bool flagged = false;  // ratio beyond the conjectured bound
  Hypergraph instance;
};

/// Conjectured ceiling on tau/nu where one is stated: 2 at (3,2) and
/// ceil((k+1)/2) at (k,k-1). Records above it are flagged.
std::optional<Rat> conjectured_ratio_bound(std::size_t k, std::size_t m);

/// FNV-1a of the canonical text form.
std::uint64_t instance_hash(const Hypergraph& h);

/// Streams strictly improving best-so-far records to `emit` and returns them.
/// Hill climbing uses single-edge moves with restarts; exhaustive mode walks
/// every edge subset of the complete k-uniform hypergraph on n vertices.
std::vector<SearchRecord> run_search(const SearchOptions& options,
                                     const std::function<void(const SearchRecord&)>& emit = {});

std::string format_record(const SearchRecord& r);

}  // namespace mcover
