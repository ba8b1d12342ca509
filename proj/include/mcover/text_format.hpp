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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mcover/hypergraph.hpp"

namespace mcover {

/// A hypergraph read from the shared text format, with its partite classes
/// when `@class` headers were present.
struct Instance {
  Hypergraph graph;
  std::optional<PartiteStructure> parts;
  std::vector<std::string> class_names;
};

/// Format: `#` starts a comment; `@class <name>: tok tok ...` declares a
/// partite class; every other nonblank line is one edge. Mixed edge sizes,
/// malformed headers and empty inputs raise ParseError.
Instance parse_instance(std::istream& in);
Instance parse_instance_string(const std::string& text);

/// Writes `header` lines as comments, then classes (if any), then edges.
void write_instance(std::ostream& out, const Hypergraph& h, const std::optional<PartiteStructure>& parts = {},
                    const std::vector<std::string>& header = {},
                    const std::vector<std::string>& class_names = {});
std::string instance_to_string(const Hypergraph& h, const std::optional<PartiteStructure>& parts = {},
                               const std::vector<std::string>& header = {});

}  // namespace mcover
