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
#include <optional>
#include <string>
#include <vector>

#include "mcover/limits.hpp"

namespace mcover {

/// One check: `expected` and `observed` are canonical strings built from
/// exact values; a row passes iff they are equal.
struct VerifyRow {
  std::string id;
  std::string claim;
  std::string expected;
  std::string observed;
  std::string note;
  bool pass = false;
};

struct VerifyReport {
  std::vector<VerifyRow> rows;

  std::size_t passed() const;
  std::size_t failed() const;
};

struct VerifyOptions {
  std::optional<std::string> only;
  /// Replaces the expected string of a row (used to exercise failure paths).
  std::map<std::string, std::string> overrides;
  Limits limits;
};

/// Check ids in suite order.
const std::vector<std::string>& verify_check_ids();

VerifyReport verify_suite(const VerifyOptions& options = {});

void write_report(std::ostream& out, const VerifyReport& report);

}  // namespace mcover
