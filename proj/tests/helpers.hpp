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

#include <sstream>
#include <string>
#include <vector>

#include "mcover/hypergraph.hpp"
#include "mcover/prng.hpp"

namespace testutil {

/// Hypergraph from lines of whitespace-separated tokens.
inline mcover::Hypergraph hg(const std::vector<std::string>& lines) {
  std::vector<std::vector<std::string>> edges;
  for (const auto& line : lines) {
    std::istringstream in(line);
    std::vector<std::string> e;
    for (std::string tok; in >> tok;) e.push_back(tok);
    edges.push_back(e);
  }
  return mcover::Hypergraph::from_tokens(edges);
}

/// Index set of the given tokens ("1 2" style).
inline mcover::VertexSet vs(const mcover::Hypergraph& h, const std::string& tokens) {
  std::istringstream in(tokens);
  std::vector<std::string> t;
  for (std::string tok; in >> tok;) t.push_back(tok);
  return h.to_set(t);
}

}  // namespace testutil
