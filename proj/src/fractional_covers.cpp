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

#include "mcover/fractional_covers.hpp"

#include <algorithm>
#include <sstream>

#include "mcover/derived.hpp"
#include "mcover/error.hpp"
#include "mcover/fractional.hpp"

namespace mcover {

namespace {

VertexSet ordered_pair(Vertex a, Vertex b) { return {std::min(a, b), std::max(a, b)}; }

}  // namespace

Cover45 cover45(const Hypergraph& h, const MatchingCert& m, const Limits& limits) {
  if (h.uniformity() != 4) fail(ErrorKind::PreconditionViolated, "cover45 needs a 4-uniform hypergraph");
  for (const auto& e : m.edges)
    if (!h.has_edge(e)) fail(ErrorKind::InvalidCertificateReference, "matching edge " + h.format_set(e) + " not in H");
  if (!is_m_matching(h, m.edges, 2)) fail(ErrorKind::PreconditionViolated, "M is not a 2-matching");
  if (m.size() != nu_int(h, 2, limits).value) fail(ErrorKind::PreconditionViolated, "M is not a maximum 2-matching");

  Cover45 out;
  out.matching = m.edges;
  for (const auto& mi : m.edges)
    for (const auto& p : subsets_of_size(mi, 2)) out.cover.add(p, make_rat(1, 2));

  // H(p): edges meeting m_i exactly in p and every other m_j in < 2 vertices.
  auto h_of = [&](std::size_t i, const VertexSet& p) {
    std::vector<VertexSet> found;
    for (const auto& e : h.edges()) {
      if (set_intersection(e, m.edges[i]) != p) continue;
      bool alone = true;
      for (std::size_t j = 0; j < m.size() && alone; ++j)
        if (j != i && intersection_size(e, m.edges[j]) >= 2) alone = false;
      if (alone) found.push_back(e);
    }
    return found;
  };

  for (std::size_t i = 0; i < m.size(); ++i) {
    const VertexSet& mi = m.edges[i];
    // Couples {mi[0] x, rest}: x ranges over the other three vertices.
    for (std::size_t x = 1; x < 4; ++x) {
      CoupleStep step;
      step.matching_index = i;
      step.p = ordered_pair(mi[0], mi[x]);
      step.q = set_difference(mi, step.p);
      const auto hp = h_of(i, step.p);
      const auto hq = h_of(i, step.q);
      step.h_p = hp.size();
      step.h_q = hq.size();
      if (hp.empty()) {
        step.r = step.q;
      } else if (hq.empty()) {
        step.r = step.p;
      } else {
        VertexSet common = set_difference(hp.front(), mi);
        for (const auto& e : hp) common = set_intersection(common, set_difference(e, mi));
        for (const auto& e : hq) common = set_intersection(common, set_difference(e, mi));
        if (common.size() != 2)
          fail(ErrorKind::InternalContradiction, "H(" + h.format_set(step.p) + ") and H(" + h.format_set(step.q) +
                                                     ") share no outside pair; M is not maximum");
        step.r = common;
      }
      out.cover.add(step.r, make_rat(1, 2));
      out.steps.push_back(std::move(step));
    }
  }
  for (const auto& e : h.edges())
    if (block_sum(out.cover, e) < 1)
      fail(ErrorKind::InternalContradiction, "edge " + h.format_set(e) + " is not fractionally covered");
  if (out.cover.total() > make_rat(9, 2) * static_cast<long>(m.size()))
    fail(ErrorKind::AssertionFailure, "4.5 construction exceeds 4.5 |M|");
  return out;
}

std::string Cover45::trace(const Hypergraph& h) const {
  std::ostringstream out;
  for (std::size_t i = 0; i < matching.size(); ++i) out << "m" << i + 1 << " " << h.format_set(matching[i]) << "\n";
  for (const auto& s : steps) {
    out << "m" << s.matching_index + 1 << " p " << h.format_set(s.p) << " q " << h.format_set(s.q) << " |H(p)| "
        << s.h_p << " |H(q)| " << s.h_q << " r " << h.format_set(s.r) << "\n";
  }
  out << "total " << to_string(cover.total()) << "\n";
  return out.str();
}

CrossingCover crossing_partition_cover(const Hypergraph& h, const std::vector<VertexSet>& support) {
  std::vector<VertexSet> u = support;
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  for (const auto& pair : u)
    if (pair.size() != 2) fail(ErrorKind::MalformedCover, "support member is not a pair");
  for (const auto& e : h.edges()) {
    std::size_t inside = 0;
    for (const auto& pair : u) inside += is_subset(pair, e);
    if (inside < 5)
      fail(ErrorKind::PreconditionViolated, "edge " + h.format_set(e) + " holds only " + std::to_string(inside) +
                                                " support pairs");
  }

  const std::size_t n = h.vertex_count();
  std::vector<std::vector<Vertex>> nbr(n);
  for (const auto& pair : u) {
    nbr[pair[0]].push_back(pair[1]);
    nbr[pair[1]].push_back(pair[0]);
  }
  std::vector<std::uint8_t> side(n);
  for (Vertex v = 0; v < n; ++v) side[v] = v % 2;

  CrossingCover out;
  out.support = u;
  for (bool moved = true; moved;) {
    moved = false;
    for (Vertex v = 0; v < n; ++v) {
      std::size_t same = 0;
      for (Vertex w : nbr[v]) same += side[w] == side[v];
      if (2 * same > nbr[v].size()) {
        side[v] ^= 1;
        ++out.moves;
        moved = true;
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) (side[v] ? out.side_b : out.side_a).push_back(v);
  for (const auto& pair : u) {
    if (side[pair[0]] == side[pair[1]]) {
      out.cover.msets.push_back(pair);
    } else {
      ++out.crossing;
    }
  }
  if (2 * out.crossing < u.size()) fail(ErrorKind::AssertionFailure, "local optimum crosses fewer than |U|/2 pairs");
  if (!is_m_cover(h, out.cover.msets, 2)) fail(ErrorKind::AssertionFailure, "non-crossing support pairs miss an edge");
  return out;
}

std::string CrossingCover::trace(const Hypergraph& h) const {
  std::ostringstream out;
  out << "|U| " << support.size() << "\n";
  out << "A " << h.format_set(side_a, ' ') << "\nB " << h.format_set(side_b, ' ') << "\n";
  out << "moves " << moves << "\ncrossing " << crossing << "\nsize " << cover.size() << "\n";
  return out.str();
}

SupportStep lp_support_step(const Hypergraph& h, const Limits& limits) {
  if (h.uniformity() != 4) fail(ErrorKind::PreconditionViolated, "support step needs a 4-uniform hypergraph");
  const auto tau = tau_star(h, 2, limits);
  const auto nu = nu_star(h, 2, limits);
  if (tau.value != nu.value) fail(ErrorKind::InternalContradiction, "fractional cover and matching values differ");

  SupportStep out;
  out.tau_star = tau.value;
  for (const auto& [pair, w] : tau.cover.support()) {
    out.support.push_back(pair);
    out.incidence_total += incidence_sum(nu.matching, pair);
    if (!out.heavy && w >= make_rat(1, 4)) out.heavy = pair;
  }
  if (out.incidence_total != static_cast<long>(out.support.size()))
    fail(ErrorKind::AssertionFailure, "support size differs from its matching load");
  if (out.incidence_total > 6 * nu.value) fail(ErrorKind::AssertionFailure, "support exceeds 6 nu*");
  if (!out.heavy && h.edge_count() > 0) out.crossing = crossing_partition_cover(h, out.support);
  return out;
}

}  // namespace mcover
