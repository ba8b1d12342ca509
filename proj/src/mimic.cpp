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

#include "mcover/mimic.hpp"

#include <algorithm>
#include <sstream>

#include "mcover/error.hpp"
#include "mcover/integral.hpp"

namespace mcover {

MimicResult mimic_cover(const Hypergraph& h, const PartiteStructure& parts, const Limits& limits) {
  const std::size_t k = h.uniformity();
  if (k < 2) fail(ErrorKind::PreconditionViolated, "mimic analysis needs k >= 2");
  if (parts.classes.size() != k) fail(ErrorKind::StructureError, "expected " + std::to_string(k) + " vertex classes");
  parts.validate(h);

  MimicResult out;
  MimicAnalysis& a = out.analysis;
  a.k = k;
  a.matching = nu_int(h, k - 1, limits).cert.edges;
  std::sort(a.matching.begin(), a.matching.end());

  for (std::size_t i = 0; i < a.n(); ++i) {
    std::vector<VertexSet> f;
    for (const auto& e : h.edges()) {
      if (std::binary_search(a.matching.begin(), a.matching.end(), e)) continue;
      if (intersection_size(e, a.matching[i]) != k - 1) continue;
      bool replaces = true;
      for (std::size_t j = 0; j < a.n() && replaces; ++j)
        if (j != i && intersection_size(e, a.matching[j]) >= k - 1) replaces = false;
      if (replaces) f.push_back(e);
    }
    if (f.empty()) {
      a.without_mimic.push_back(i);
      continue;
    }
    VertexSet p = a.matching[i];
    for (const auto& e : f) p = set_intersection(p, e);
    if (p.size() != k - 1)
      fail(ErrorKind::AssertionFailure, "mimickers of " + h.format_set(a.matching[i]) + " share only " +
                                            std::to_string(p.size()) + " vertices of it");
    a.with_mimic.push_back(i);
    a.mimickers.push_back(std::move(f));
    a.common.push_back(std::move(p));
  }

  WeightFn g1(WeightKind::Cover, k - 1), g2(WeightKind::Cover, k - 1);
  for (const auto& m : a.matching)
    for (const auto& s : subsets_of_size(m, k - 1)) g1.set(s, make_rat(1, 2));
  for (const auto& p : a.common) {
    g1.set(p, 1);
    g2.set(p, 1);
  }
  for (std::size_t j : a.without_mimic)
    for (const auto& s : subsets_of_size(a.matching[j], k - 1)) g2.set(s, 1);

  const long n = static_cast<long>(a.n()), t = static_cast<long>(a.t()), kk = static_cast<long>(k);
  out.g1_total = g1.total();
  out.g2_total = g2.total();
  if (out.g1_total != make_rat(kk * n + t, 2)) fail(ErrorKind::AssertionFailure, "g1 total differs from kn/2 + t/2");
  if (out.g2_total != kk * n - (kk - 1) * t) fail(ErrorKind::AssertionFailure, "g2 total differs from kn - (k-1)t");
  if (!is_fractional_cover(h, g1)) fail(ErrorKind::AssertionFailure, "g1 is not a fractional cover");
  if (!is_fractional_cover(h, g2)) fail(ErrorKind::AssertionFailure, "g2 is not a cover");

  out.bound = make_rat(kk * kk * n, 2 * kk - 1);
  out.integral = out.g2_total <= out.g1_total;
  out.cover = out.integral ? g2 : g1;
  if (out.cover.total() > out.bound) fail(ErrorKind::AssertionFailure, "mimic cover exceeds k^2 n / (2k-1)");
  return out;
}

std::string MimicAnalysis::trace(const Hypergraph& h) const {
  std::ostringstream out;
  out << "n " << n() << " t " << t() << "\n";
  for (std::size_t i = 0; i < matching.size(); ++i) out << "m" << i + 1 << " " << h.format_set(matching[i]) << "\n";
  for (std::size_t j = 0; j < with_mimic.size(); ++j) {
    out << "M1 m" << with_mimic[j] + 1 << " p " << h.format_set(common[j]) << " F";
    for (const auto& e : mimickers[j]) out << ' ' << h.format_set(e);
    out << "\n";
  }
  for (std::size_t j : without_mimic) out << "M2 m" << j + 1 << "\n";
  return out.str();
}

}  // namespace mcover
