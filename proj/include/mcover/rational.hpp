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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mcover {

/// Exact rational; GMP keeps it canonical (gcd 1, positive denominator)
/// after every arithmetic operation.
using Rat = mpq_class;
using BigInt = mpz_class;

Rat make_rat(long num, long den = 1);

/// "5/2", or "4" for integers.
std::string to_string(const Rat& r);
/// Always "p/q", e.g. "4/1".
std::string to_pq_string(const Rat& r);
/// Accepts "p/q" or an integer; ParseError otherwise or on zero denominator.
Rat parse_rat(std::string_view text);

BigInt ceil(const Rat& r);
BigInt floor(const Rat& r);

}  // namespace mcover
