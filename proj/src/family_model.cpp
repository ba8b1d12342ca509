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

#include "mcover/family_model.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <sstream>

#include "mcover/error.hpp"

namespace mcover {

namespace {

std::vector<BcEdge> minus(const std::vector<BcEdge>& a, const std::vector<BcEdge>& b) {
  std::vector<BcEdge> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<BcEdge> meet(const std::vector<BcEdge>& a, const std::vector<BcEdge>& b) {
  std::vector<BcEdge> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<BcEdge> to_bc(const std::vector<GraphEdge>& edges, std::size_t left) {
  std::vector<BcEdge> out;
  for (auto [u, v] : edges) out.emplace_back(u, static_cast<std::uint32_t>(v - left));
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_bc(const EdgeFamilySeq& f, const std::vector<BcEdge>& edges) {
  std::string out = "{";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ' ';
    out += f.b_labels[edges[i].first] + f.c_labels[edges[i].second];
  }
  return out + "}";
}

// Exact search for family_nu2: each distinct bc is skipped or placed in one
// family where both endpoints are still free.
class FamilyPacking {
 public:
  FamilyPacking(const EdgeFamilySeq& f, const Limits& limits) : f_(f), limits_(limits), edges_(f.support()) {
    for (const auto& e : edges_) {
      std::vector<std::size_t> owners;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (std::binary_search(f.families[i].begin(), f.families[i].end(), e)) owners.push_back(i);
      owners_.push_back(std::move(owners));
    }
    used_b_.assign(f.size(), std::vector<bool>(f.b_labels.size(), false));
    used_c_.assign(f.size(), std::vector<bool>(f.c_labels.size(), false));
  }

  std::size_t solve() {
    recurse(0, 0);
    return best_;
  }

 private:
  void recurse(std::size_t at, std::size_t chosen) {
    if (++nodes_ > limits_.search_nodes) fail(ErrorKind::SizeLimitExceeded, "family matching search exceeded node limit");
    best_ = std::max(best_, chosen);
    if (at == edges_.size() || chosen + (edges_.size() - at) <= best_) return;
    const auto [b, c] = edges_[at];
    for (std::size_t i : owners_[at]) {
      if (used_b_[i][b] || used_c_[i][c]) continue;
      used_b_[i][b] = used_c_[i][c] = true;
      recurse(at + 1, chosen + 1);
      used_b_[i][b] = used_c_[i][c] = false;
    }
    recurse(at + 1, chosen);
  }

  const EdgeFamilySeq& f_;
  const Limits& limits_;
  std::vector<BcEdge> edges_;
  std::vector<std::vector<std::size_t>> owners_;
  std::vector<std::vector<bool>> used_b_, used_c_;
  std::size_t best_ = 0;
  std::size_t nodes_ = 0;
};

}  // namespace

std::vector<BcEdge> EdgeFamilySeq::support() const {
  std::set<BcEdge> all;
  for (const auto& fam : families) all.insert(fam.begin(), fam.end());
  return {all.begin(), all.end()};
}

SimpleGraph EdgeFamilySeq::graph(const std::vector<BcEdge>& edges) const {
  std::vector<std::string> labels = b_labels;
  labels.insert(labels.end(), c_labels.begin(), c_labels.end());
  return SimpleGraph::bipartite(b_labels.size(), c_labels.size(), edges, std::move(labels));
}

EdgeFamilySeq EdgeFamilySeq::make(std::size_t b_count, std::size_t c_count, std::vector<std::vector<BcEdge>> families) {
  EdgeFamilySeq f;
  for (std::size_t i = 0; i < families.size(); ++i) f.a_labels.push_back("a" + std::to_string(i + 1));
  for (std::size_t i = 0; i < b_count; ++i) f.b_labels.push_back("b" + std::to_string(i + 1));
  for (std::size_t i = 0; i < c_count; ++i) f.c_labels.push_back("c" + std::to_string(i + 1));
  for (auto& fam : families) {
    for (auto [b, c] : fam)
      if (b >= b_count || c >= c_count) fail(ErrorKind::ParameterError, "family edge endpoint out of range");
    std::sort(fam.begin(), fam.end());
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
  }
  f.families = std::move(families);
  return f;
}

EdgeFamilySeq to_family(const Hypergraph& h, const PartiteStructure& parts, std::size_t a_class) {
  if (parts.classes.size() != 3) fail(ErrorKind::StructureError, "family model needs exactly three classes");
  if (h.uniformity() != 3) fail(ErrorKind::StructureError, "family model needs a 3-uniform hypergraph");
  if (a_class > 2) fail(ErrorKind::ParameterError, "singled class index out of range");
  parts.validate(h);

  std::vector<std::size_t> order = {a_class};
  for (std::size_t i = 0; i < 3; ++i)
    if (i != a_class) order.push_back(i);
  const VertexSet& a = parts.classes[order[0]];
  const VertexSet& b = parts.classes[order[1]];
  const VertexSet& c = parts.classes[order[2]];

  EdgeFamilySeq f;
  f.a_labels = h.to_tokens(a);
  f.b_labels = h.to_tokens(b);
  f.c_labels = h.to_tokens(c);
  f.families.resize(a.size());
  auto position = [](const VertexSet& cls, Vertex v) {
    return static_cast<std::uint32_t>(std::lower_bound(cls.begin(), cls.end(), v) - cls.begin());
  };
  for (const auto& e : h.edges()) {
    Vertex va = 0, vb = 0, vc = 0;
    for (Vertex v : e) {
      if (std::binary_search(a.begin(), a.end(), v)) va = v;
      if (std::binary_search(b.begin(), b.end(), v)) vb = v;
      if (std::binary_search(c.begin(), c.end(), v)) vc = v;
    }
    f.families[position(a, va)].emplace_back(position(b, vb), position(c, vc));
  }
  for (auto& fam : f.families) std::sort(fam.begin(), fam.end());
  return f;
}

Hypergraph from_family(const EdgeFamilySeq& f) {
  std::vector<std::vector<std::string>> edges;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (auto [b, c] : f.families[i]) edges.push_back({f.a_labels.at(i), f.b_labels.at(b), f.c_labels.at(c)});
  std::vector<std::string> vertices = f.a_labels;
  vertices.insert(vertices.end(), f.b_labels.begin(), f.b_labels.end());
  vertices.insert(vertices.end(), f.c_labels.begin(), f.c_labels.end());
  return Hypergraph::from_tokens(edges, vertices, 3);
}

std::size_t family_nu2(const EdgeFamilySeq& f, const Limits& limits) { return FamilyPacking(f, limits).solve(); }

std::size_t FamilyCover::size() const {
  std::size_t total = z.size();
  for (const auto& vc : vertex_covers) total += vc.size();
  return total;
}

bool is_family_cover(const EdgeFamilySeq& f, const FamilyCover& cover) {
  if (cover.vertex_covers.size() != f.size()) return false;
  std::vector<BcEdge> z = cover.z;
  std::sort(z.begin(), z.end());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& vc = cover.vertex_covers[i];
    for (auto [b, c] : minus(f.families[i], z)) {
      const bool hit = std::find(vc.begin(), vc.end(), f.b_labels[b]) != vc.end() ||
                       std::find(vc.begin(), vc.end(), f.c_labels[c]) != vc.end();
      if (!hit) return false;
    }
  }
  return true;
}

std::size_t family_tau2(const EdgeFamilySeq& f, const Limits& limits) {
  const auto all = f.support();
  if (all.size() > limits.bruteforce_edges)
    fail(ErrorKind::SizeLimitExceeded, "family union has " + std::to_string(all.size()) + " edges, limit " +
                                           std::to_string(limits.bruteforce_edges));
  std::size_t best = 0;
  bool have = false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
    std::vector<BcEdge> z;
    for (std::size_t j = 0; j < all.size(); ++j)
      if (mask >> j & 1) z.push_back(all[j]);
    std::size_t value = z.size();
    for (const auto& fam : f.families) value += bipartite_cover_number(f.graph(minus(fam, z)));
    if (!have || value < best) {
      best = value;
      have = true;
    }
  }
  return best;
}

TunuResult tunu_construct(const EdgeFamilySeq& f) {
  if (f.size() != 2) fail(ErrorKind::ParameterError, "the 5/3 construction takes exactly two families");
  const std::size_t left = f.b_labels.size();

  TunuResult out;
  TunuTrace& t = out.trace;
  t.n_matching = to_bc(bip_matching_cover(f.graph(meet(f.families[0], f.families[1]))).matching, left);
  t.n = t.n_matching.size();

  std::vector<BipartiteDuality> rest;
  for (const auto& fam : f.families) rest.push_back(bip_matching_cover(f.graph(minus(fam, t.n_matching))));
  std::vector<std::vector<BcEdge>> ls = {to_bc(rest[0].matching, left), to_bc(rest[1].matching, left)};
  t.swapped = ls[0].size() < ls[1].size();
  t.l1 = ls[t.swapped ? 1 : 0];
  t.l2 = ls[t.swapped ? 0 : 1];
  t.ell1 = t.l1.size();
  t.ell2 = t.l2.size();
  if (t.n > 0) {
    t.alpha1 = Rat(static_cast<long>(t.ell1), static_cast<long>(t.n)) - 1;
    t.alpha2 = Rat(static_cast<long>(t.ell2), static_cast<long>(t.n)) - 1;
    t.alpha1->canonicalize();
    t.alpha2->canonicalize();
  }
  const auto common = meet(t.l1, t.l2);
  if (common.size() > t.n) fail(ErrorKind::InternalContradiction, "L_1 and L_2 share more than n edges");
  t.union_size = t.ell1 + t.ell2 - common.size();
  t.lower_bound = std::max(t.n + t.ell1, t.union_size);

  out.cover.z = t.n_matching;
  const SimpleGraph labels_only = f.graph({});
  for (const auto& duality : rest) {
    std::vector<std::string> vc;
    for (auto v : duality.cover) vc.push_back(labels_only.labels()[v]);
    out.cover.vertex_covers.push_back(std::move(vc));
  }
  if (!is_family_cover(f, out.cover)) fail(ErrorKind::AssertionFailure, "Z = N construction is not a family cover");
  if (out.cover.size() != t.n + t.ell1 + t.ell2) fail(ErrorKind::AssertionFailure, "cover size differs from n + l1 + l2");
  if (3 * out.cover.size() > 5 * t.lower_bound)
    fail(ErrorKind::AssertionFailure, "cover exceeds 5/3 of the witnessed family matching");
  return out;
}

std::string TunuTrace::trace(const EdgeFamilySeq& f) const {
  std::ostringstream out;
  out << "N " << format_bc(f, n_matching) << "\n";
  out << "L1 " << format_bc(f, l1) << "\nL2 " << format_bc(f, l2) << "\n";
  out << "n " << n << " l1 " << ell1 << " l2 " << ell2 << (swapped ? " swapped" : "") << "\n";
  if (alpha1) out << "alpha1 " << to_string(*alpha1) << " alpha2 " << to_string(*alpha2) << "\n";
  out << "|L1 u L2| " << union_size << "\nlower " << lower_bound << "\nsize " << n + ell1 + ell2 << "\n";
  return out.str();
}

}  // namespace mcover
