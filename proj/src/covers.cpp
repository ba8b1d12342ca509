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

#include "mcover/covers.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mcover/derived.hpp"
#include "mcover/error.hpp"

namespace mcover {

namespace {

std::string join_sets(const Hypergraph& h, const std::vector<VertexSet>& sets) {
  std::string out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) out += ' ';
    out += h.format_set(sets[i]);
  }
  return out;
}

std::vector<VertexSet> pairs_of(const VertexSet& s) { return subsets_of_size(s, 2); }

CoverCert make_cover(std::set<VertexSet> pairs) { return CoverCert{{pairs.begin(), pairs.end()}}; }

// Heads and tails of an edge ordered with `common` first.
std::pair<VertexSet, VertexSet> split_head(const VertexSet& edge, const VertexSet& common, std::size_t head) {
  VertexSet ordered = common;
  for (Vertex v : edge)
    if (!std::binary_search(common.begin(), common.end(), v)) ordered.push_back(v);
  VertexSet a(ordered.begin(), ordered.begin() + static_cast<long>(std::min(head, ordered.size())));
  VertexSet b(ordered.begin() + static_cast<long>(a.size()), ordered.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return {a, b};
}

std::set<VertexSet> heads_and_tails(const VertexSet& a_e, const VertexSet& a_f, const VertexSet& b_e,
                                    const VertexSet& b_f) {
  std::set<VertexSet> pairs;
  for (auto& p : pairs_of(a_e)) pairs.insert(p);
  for (auto& p : pairs_of(a_f)) pairs.insert(p);
  for (Vertex x : b_e)
    for (Vertex y : b_f)
      if (x != y) pairs.insert({std::min(x, y), std::max(x, y)});
  return pairs;
}

}  // namespace

void require_intersecting(const Hypergraph& h, std::size_t m, const Limits& limits) {
  if (h.edge_count() == 0) fail(ErrorKind::PreconditionViolated, "hypergraph has no edges");
  const auto nu = nu_int(h, m, limits).value;
  if (nu != 1)
    fail(ErrorKind::PreconditionViolated, "nu^(" + std::to_string(m) + ") is " + std::to_string(nu) + ", expected 1");
}

TwoEdgeCover two_edge_cover(const Hypergraph& h, const Limits& limits) {
  const std::size_t k = h.uniformity();
  if (k < 3) fail(ErrorKind::PreconditionViolated, "two_edge_cover needs k >= 3");
  require_intersecting(h, 2, limits);
  const std::size_t head = (k + 1) / 2;

  TwoEdgeCover out;
  if (h.edge_count() == 1) {
    out.e = out.f = h.edge(0);
    out.r = k;
    out.t = head;
    out.bound = static_cast<std::size_t>(binomial(k, 2) - binomial(out.t, 2));
    out.variant = "single-edge";
    out.cover.msets.push_back(pairs_of(out.e).front());
    return out;
  }

  std::size_t r = 0;
  for (std::size_t i = 0; i < h.edge_count(); ++i)
    for (std::size_t j = i + 1; j < h.edge_count(); ++j) r = std::max(r, intersection_size(h.edge(i), h.edge(j)));
  const std::size_t t = std::min(r, head);
  const std::size_t bound = static_cast<std::size_t>(binomial(k, 2) - binomial(t, 2));

  struct Candidate {
    TwoEdgeCover built;
    bool valid;
  };
  std::vector<Candidate> candidates;
  auto consider = [&](std::size_t i, std::size_t j, bool core) {
    TwoEdgeCover c;
    c.e = h.edge(i);
    c.f = h.edge(j);
    c.r = r;
    c.t = t;
    c.bound = bound;
    const VertexSet common = set_intersection(c.e, c.f);
    c.variant = core ? "core" : "heads";
    const std::size_t take = core ? common.size() : head;
    const VertexSet lead(common.begin(), common.begin() + static_cast<long>(std::min(take, common.size())));
    std::tie(c.a_e, c.b_e) = split_head(c.e, lead, take);
    std::tie(c.a_f, c.b_f) = split_head(c.f, lead, take);
    c.cover = make_cover(heads_and_tails(c.a_e, c.a_f, c.b_e, c.b_f));
    candidates.push_back({c, is_m_cover(h, c.cover.msets, 2)});
  };

  // The head construction is exact when |e n f| = t. Pairs meeting in more
  // than ceil(k/2) vertices can share tail vertices, which the core variant
  // avoids by making the whole intersection the head.
  for (std::size_t i = 0; i < h.edge_count(); ++i)
    for (std::size_t j = i + 1; j < h.edge_count(); ++j) {
      const std::size_t s = intersection_size(h.edge(i), h.edge(j));
      if (s == t) consider(i, j, false);
      if (s > head) consider(i, j, true);
      if (!candidates.empty() && candidates.back().valid && candidates.back().built.cover.size() <= bound) {
        return candidates.back().built;
      }
    }
  for (auto& c : candidates)
    if (c.valid && c.built.cover.size() <= bound) return c.built;
  fail(ErrorKind::AssertionFailure, "no head/tail 2-cover within C(k,2) - C(t,2) = " + std::to_string(bound));
}

std::string TwoEdgeCover::trace(const Hypergraph& h) const {
  std::ostringstream out;
  out << "variant " << variant << "\n";
  out << "e " << h.format_set(e) << "\nf " << h.format_set(f) << "\n";
  out << "r " << r << "\nt " << t << "\n";
  out << "A_e " << h.format_set(a_e) << "\nA_f " << h.format_set(a_f) << "\n";
  out << "B_e " << h.format_set(b_e) << "\nB_f " << h.format_set(b_f) << "\n";
  out << "size " << cover.size() << " bound " << bound << "\n";
  return out.str();
}

GStarCover gstar_upper_cover(const Hypergraph& h, const Limits& limits) {
  const std::size_t k = h.uniformity();
  if (k < 3) fail(ErrorKind::PreconditionViolated, "gstar_upper_cover needs k >= 3");
  require_intersecting(h, 2, limits);

  GStarCover out;
  out.bound = Rat(static_cast<long>(k * k), 4) + static_cast<long>(k) - 2;
  out.bound.canonicalize();
  std::optional<std::pair<std::size_t, std::size_t>> two;
  for (std::size_t i = 0; i < h.edge_count() && !two; ++i)
    for (std::size_t j = i + 1; j < h.edge_count(); ++j)
      if (intersection_size(h.edge(i), h.edge(j)) == 2) {
        two = {i, j};
        break;
      }

  if (!two) {
    out.variant = "all-meet-3";
    out.e = h.edge(0);
    for (const auto& p : pairs_of(out.e)) out.cover.set(p, make_rat(1, 3));
  } else {
    out.variant = "two-meet-2";
    out.e = h.edge(two->first);
    out.f = h.edge(two->second);
    const VertexSet w = set_intersection(out.e, out.f);
    const VertexSet v = set_difference(out.e, out.f);
    const VertexSet u = set_difference(out.f, out.e);
    out.cover.set(w, 1);
    for (Vertex wi : w)
      for (Vertex vj : v) out.cover.set({std::min(wi, vj), std::max(wi, vj)}, 1);
    for (Vertex vi : v)
      for (Vertex uj : u) out.cover.set({std::min(vi, uj), std::max(vi, uj)}, make_rat(1, 4));
  }
  if (!is_fractional_cover(h, out.cover)) fail(ErrorKind::AssertionFailure, "g* upper construction is not a fractional 2-cover");
  if (out.cover.total() > out.bound) fail(ErrorKind::AssertionFailure, "g* upper construction exceeds k^2/4 + k - 2");
  return out;
}

std::string GStarCover::trace(const Hypergraph& h) const {
  std::ostringstream out;
  out << "variant " << variant << "\ne " << h.format_set(e) << "\n";
  if (!f.empty()) out << "f " << h.format_set(f) << "\n";
  out << "total " << to_string(cover.total()) << " bound " << to_string(bound) << "\n";
  return out.str();
}

G42Cover g42_cover(const Hypergraph& h, const Limits& limits) {
  if (h.uniformity() != 4) fail(ErrorKind::PreconditionViolated, "g42_cover needs a 4-uniform hypergraph");
  require_intersecting(h, 2, limits);

  G42Cover out;
  out.e = h.edge(0);
  const auto e_pairs = pairs_of(out.e);
  auto witnesses_of = [&](const VertexSet& pair) {
    std::vector<VertexSet> found;
    for (const auto& f : h.edges())
      if (set_intersection(f, out.e) == pair) found.push_back(f);
    return found;
  };
  for (const auto& p : e_pairs)
    if (witnesses_of(p).empty()) out.dispensable.push_back(p);

  std::set<VertexSet> cover(e_pairs.begin(), e_pairs.end());
  if (out.dispensable.size() >= 2) {
    cover.erase(out.dispensable[0]);
    cover.erase(out.dispensable[1]);
  } else {
    // The three ways to split e into two disjoint pairs; take the first two
    // whose pairs are both indispensable.
    const Vertex w = out.e[0], x = out.e[1], y = out.e[2], z = out.e[3];
    const std::vector<std::pair<VertexSet, VertexSet>> splits = {
        {{w, x}, {y, z}}, {{w, y}, {x, z}}, {{w, z}, {x, y}}};
    std::vector<std::pair<VertexSet, VertexSet>> usable;
    for (const auto& s : splits)
      if (witnesses_of(s.first).size() && witnesses_of(s.second).size()) usable.push_back(s);
    if (usable.size() < 2) fail(ErrorKind::InternalContradiction, "fewer than two indispensable splits of e");
    auto meet_outside = [&](const VertexSet& a, const VertexSet& b) {
      const VertexSet f = witnesses_of(a).front();
      const VertexSet g = witnesses_of(b).front();
      const VertexSet common = set_intersection(f, g);
      if (common.size() != 2 || intersection_size(common, out.e) != 0)
        fail(ErrorKind::InternalContradiction, "witnesses " + h.format_set(f) + " and " + h.format_set(g) +
                                                   " do not meet in a pair outside e");
      out.witnesses.push_back(f);
      out.witnesses.push_back(g);
      return common;
    };
    out.x = meet_outside(usable[0].first, usable[0].second);
    out.y = meet_outside(usable[1].first, usable[1].second);
    out.removed = {usable[0].first, usable[0].second, usable[1].first, usable[1].second};
    for (const auto& p : out.removed) cover.erase(p);
    cover.insert(*out.x);
    cover.insert(*out.y);
  }
  out.cover = make_cover(std::move(cover));
  if (!is_m_cover(h, out.cover.msets, 2)) fail(ErrorKind::AssertionFailure, "indispensable-pair construction is not a 2-cover");
  if (out.cover.size() > 4) fail(ErrorKind::AssertionFailure, "indispensable-pair cover has more than 4 pairs");
  return out;
}

std::string G42Cover::trace(const Hypergraph& h) const {
  std::ostringstream out;
  out << "e " << h.format_set(e) << "\n";
  out << "dispensable " << join_sets(h, dispensable) << "\n";
  if (x) {
    out << "removed " << join_sets(h, removed) << "\n";
    out << "witnesses " << join_sets(h, witnesses) << "\n";
    out << "x " << h.format_set(*x) << "\ny " << h.format_set(*y) << "\n";
  }
  out << "size " << cover.size() << "\n";
  return out.str();
}

KK1Cover kk1_cover(const Hypergraph& h, const Limits& limits) {
  const std::size_t k = h.uniformity();
  if (k < 2) fail(ErrorKind::PreconditionViolated, "kk1_cover needs k >= 2");
  require_intersecting(h, k - 1, limits);

  KK1Cover out;
  const VertexSet& e = h.edge(0);
  std::set<Vertex> removed_from_e;
  for (std::size_t i = 1; i < h.edge_count(); ++i) {
    const VertexSet u = set_difference(e, h.edge(i));
    if (u.size() != 1) fail(ErrorKind::InternalContradiction, "edge meets e in fewer than k-1 vertices");
    removed_from_e.insert(u.front());
  }

  if (removed_from_e.size() <= 1) {
    out.variant = "common-removed-vertex";
    out.removed = removed_from_e.empty() ? e.back() : *removed_from_e.begin();
    out.cover.msets.push_back(set_difference(e, VertexSet{*out.removed}));
  } else {
    out.variant = "k-plus-one-vertices";
    VertexSet all;
    for (const auto& f : h.edges()) all = set_union(all, f);
    if (all.size() != k + 1) fail(ErrorKind::InternalContradiction, "edges span more than k+1 vertices");
    // Consecutive pairs cover all k+1 vertices; the last wraps to the first when k+1 is odd.
    std::set<VertexSet> cover;
    for (std::size_t i = 0; i < all.size(); i += 2) {
      const Vertex a = all[i];
      const Vertex b = i + 1 < all.size() ? all[i + 1] : all[0];
      cover.insert(set_difference(all, VertexSet{std::min(a, b), std::max(a, b)}));
    }
    out.cover = make_cover(std::move(cover));
  }
  if (!is_m_cover(h, out.cover.msets, k - 1)) fail(ErrorKind::AssertionFailure, "(k-1)-cover construction failed");
  if (out.cover.size() > (k + 2) / 2) fail(ErrorKind::AssertionFailure, "(k-1)-cover exceeds ceil((k+1)/2)");
  return out;
}

std::string KK1Cover::trace(const Hypergraph& h) const {
  std::ostringstream out;
  out << "variant " << variant << "\n";
  if (removed) out << "u " << h.token(*removed) << "\n";
  out << "size " << cover.size() << "\n";
  return out.str();
}

}  // namespace mcover
