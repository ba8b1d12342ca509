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

#include <doctest.h>

#include "helpers.hpp"
#include "mcover/covers.hpp"
#include "mcover/derived.hpp"
#include "mcover/error.hpp"
#include "mcover/families.hpp"
#include "mcover/family_model.hpp"
#include "mcover/fractional.hpp"
#include "mcover/fractional_covers.hpp"
#include "mcover/integral.hpp"
#include "mcover/mimic.hpp"
#include "mcover/prng.hpp"
#include "mcover/sunflower.hpp"
#include "oracles.hpp"

using namespace mcover;
using testutil::hg;
using testutil::vs;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an mcover::Error");
  return ErrorKind::AssertionFailure;
}

/// Seeded k-uniform instances with nu^(m) = 1; rejected draws are skipped.
std::vector<Hypergraph> intersecting(std::size_t k, std::size_t m, std::size_t extra, std::size_t count,
                                     std::uint64_t salt) {
  std::vector<Hypergraph> out;
  for (std::uint64_t seed = 1; out.size() < count && seed < 50 * count; ++seed) {
    XorShift64Star rng(seed * salt);
    const std::size_t n = k + extra;
    const auto h = gen_random(k, n, rng.between(1, std::min<std::size_t>(binomial(n, k), 8)), seed * salt);
    if (oracle::nu(h, m) == 1) out.push_back(h);
  }
  return out;
}

EdgeFamilySeq random_pair(XorShift64Star& rng) {
  const std::size_t bs = rng.between(1, 3), cs = rng.between(1, 3);
  std::vector<std::vector<BcEdge>> fams(2);
  for (auto& fam : fams)
    for (std::uint32_t b = 0; b < bs; ++b)
      for (std::uint32_t c = 0; c < cs; ++c)
        if (rng.below(2)) fam.emplace_back(b, c);
  return EdgeFamilySeq::make(bs, cs, fams);
}

}  // namespace

TEST_CASE("two-edge cover: named instances") {
  const auto g42 = gen_g42_witness();
  const auto r = two_edge_cover(g42);
  CHECK(r.bound == 5);
  CHECK(r.cover.size() <= 5);
  CHECK(is_m_cover(g42, r.cover.msets, 2));

  const auto pair = hg({"1 2 3 4", "1 2 5 6"});
  const auto p = two_edge_cover(pair);
  CHECK(p.cover.size() <= 5);
  CHECK(is_m_cover(pair, p.cover.msets, 2));
  CHECK(p.variant == "heads");

  const auto single = hg({"1 2 3 4"});
  const auto s = two_edge_cover(single);
  CHECK(s.cover.size() == 1);
  CHECK(s.variant == "single-edge");
  CHECK(is_m_cover(single, s.cover.msets, 2));

  CHECK(kind_of([] { two_edge_cover(gen_star(6)); }) == ErrorKind::PreconditionViolated);
  CHECK(kind_of([] { two_edge_cover(hg({"1 2"})); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("two-edge cover: intersection larger than half the edge") {
  // Heads of size ceil(k/2) would put vertex 3 in both tails and miss 1367.
  const auto h = hg({"1 2 3 4", "1 2 3 5", "1 3 6 7"});
  const auto r = two_edge_cover(h);
  CHECK(r.t == 2);
  CHECK(r.cover.size() <= r.bound);
  CHECK(is_m_cover(h, r.cover.msets, 2));
  CHECK(r.trace(h).find("variant") != std::string::npos);
}

TEST_CASE("property: two-edge cover bound and validity") {
  for (std::size_t k = 3; k <= 6; ++k)
    for (const auto& h : intersecting(k, 2, 2, 25, 7 + k)) {
      const auto r = two_edge_cover(h);
      CHECK(is_m_cover(h, r.cover.msets, 2));
      CHECK(r.cover.size() <= r.bound);
      CHECK(r.bound < binomial(k, 2));
      CHECK(oracle::tau(h, 2) <= r.cover.size());
    }
}

TEST_CASE("fractional cover upper construction") {
  const auto two = hg({"1 2 3 4", "1 2 5 6"});
  const auto a = gstar_upper_cover(two);
  CHECK(a.variant == "two-meet-2");
  CHECK(a.cover.total() == 6);
  CHECK(a.bound == 6);
  CHECK(is_fractional_cover(two, a.cover));

  const auto k5 = gen_complete_subsets(5, 4);
  const auto b = gstar_upper_cover(k5);
  CHECK(b.variant == "all-meet-3");
  CHECK(b.cover.total() == 2);
  CHECK(is_fractional_cover(k5, b.cover));

  const auto g42 = gen_g42_witness();
  const auto c = gstar_upper_cover(g42);
  for (const auto& e : g42.edges()) CHECK(block_sum(c.cover, e) >= 1);
}

TEST_CASE("property: fractional cover upper construction") {
  for (std::size_t k = 3; k <= 6; ++k)
    for (const auto& h : intersecting(k, 2, 2, 20, 31 + k)) {
      const auto r = gstar_upper_cover(h);
      CHECK(is_fractional_cover(h, r.cover));
      CHECK(r.cover.total() <= r.bound);
      CHECK(tau_star(h, 2).value <= r.cover.total());
    }
}

TEST_CASE("indispensable-pair cover") {
  const auto g42 = gen_g42_witness();
  const auto r = g42_cover(g42);
  CHECK(r.cover.size() == 4);
  CHECK(is_m_cover(g42, r.cover.msets, 2));
  CHECK(r.dispensable.empty());
  CHECK(r.x);
  CHECK(r.trace(g42).find("witnesses") != std::string::npos);

  const auto single = hg({"1 2 3 4"});
  const auto s = g42_cover(single);
  CHECK(s.cover.size() <= 4);
  CHECK(is_m_cover(single, s.cover.msets, 2));
  CHECK(kind_of([] { g42_cover(gen_star(6)); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("property: indispensable-pair cover on intersecting 4-uniform instances") {
  for (const auto& h : intersecting(4, 2, 3, 60, 101)) {
    const auto r = g42_cover(h);
    CHECK(is_m_cover(h, r.cover.msets, 2));
    CHECK(r.cover.size() <= 4);
    CHECK(tau_int(h, 2).value <= r.cover.size());
  }
}

TEST_CASE("(k-1)-cover construction") {
  const auto k5 = gen_complete_subsets(5, 4);
  const auto r = kk1_cover(k5);
  CHECK(r.cover.size() == 3);
  CHECK(r.variant == "k-plus-one-vertices");
  CHECK(is_m_cover(k5, r.cover.msets, 3));

  const auto pair = hg({"1 2 3 4", "1 2 3 5"});
  const auto p = kk1_cover(pair);
  CHECK(p.cover.size() == 1);
  CHECK(pair.format_set(p.cover.msets[0]) == "1,2,3");

  const auto single = hg({"1 2 3"});
  CHECK(kk1_cover(single).cover.size() == 1);
  CHECK(kind_of([] { kk1_cover(hg({"1 2 3", "4 5 6"})); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("property: (k-1)-cover construction") {
  for (std::size_t k = 3; k <= 5; ++k)
    for (const auto& h : intersecting(k, k - 1, 2, 25, 53 + k)) {
      const auto r = kk1_cover(h);
      CHECK(is_m_cover(h, r.cover.msets, k - 1));
      CHECK(r.cover.size() <= (k + 2) / 2);
      CHECK(tau_int(h, k - 1).value <= r.cover.size());
    }
}

TEST_CASE("4.5 construction") {
  const auto single = hg({"1 2 3 4"});
  const auto s = cover45(single, nu_int(single, 2).cert);
  CHECK(s.cover.total() == make_rat(9, 2));
  CHECK(is_fractional_cover(single, s.cover));

  const auto g42 = gen_g42_witness();
  const auto r = cover45(g42, MatchingCert{{vs(g42, "a b c d")}});
  CHECK(is_fractional_cover(g42, r.cover));
  CHECK(r.cover.total() <= make_rat(9, 2));
  CHECK(tau_star(g42, 2).value <= r.cover.total());
  CHECK(r.steps.size() == 3);

  const auto two = hg({"1 2 3 4", "5 6 7 8"});
  CHECK(kind_of([&] { cover45(two, MatchingCert{{vs(two, "1 2 3 4")}}); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("property: 4.5 construction on random 4-uniform instances") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    XorShift64Star rng(seed * 5);
    const std::size_t n = rng.between(5, 8);
    const auto h = gen_random(4, n, rng.between(1, std::min<std::size_t>(binomial(n, 4), 12)), seed);
    const auto m = nu_int(h, 2);
    const auto r = cover45(h, m.cert);
    CHECK(is_fractional_cover(h, r.cover));
    CHECK(r.cover.total() <= make_rat(9, 2) * static_cast<long>(m.value));
  }
}

TEST_CASE("crossing partition on a two-edge instance") {
  const auto h = hg({"1 2 3 4", "1 2 5 6"});
  std::vector<VertexSet> u = subsets_of_size(vs(h, "1 2 3 4"), 2);
  for (const auto* p : {"1 5", "1 6", "2 5", "2 6"}) u.push_back(vs(h, p));
  REQUIRE(u.size() == 10);
  const auto r = crossing_partition_cover(h, u);
  CHECK(is_m_cover(h, r.cover.msets, 2));
  CHECK(r.cover.size() <= 5);
  CHECK(2 * r.crossing >= u.size());

  // Local optimum: no single move increases the number of crossing pairs.
  std::vector<int> side(h.vertex_count(), 0);
  for (Vertex v : r.side_b) side[v] = 1;
  auto crossing = [&] {
    std::size_t c = 0;
    for (const auto& p : u) c += side[p[0]] != side[p[1]];
    return c;
  };
  const std::size_t base = crossing();
  CHECK(base == r.crossing);
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    side[v] ^= 1;
    CHECK(crossing() <= base);
    side[v] ^= 1;
  }

  std::vector<VertexSet> thin(u.begin(), u.begin() + 6);
  CHECK(kind_of([&] { crossing_partition_cover(h, thin); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("property: support step of an optimal fractional pair") {
  std::size_t partitioned = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    XorShift64Star rng(seed * 13);
    const std::size_t n = rng.between(5, 9);
    const auto h = gen_random(4, n, rng.between(1, std::min<std::size_t>(binomial(n, 4), 14)), seed);
    const auto step = lp_support_step(h);
    CHECK(step.incidence_total == static_cast<long>(step.support.size()));
    if (step.crossing) {
      ++partitioned;
      CHECK(is_m_cover(h, step.crossing->cover.msets, 2));
      CHECK(2 * step.crossing->cover.size() <= step.support.size());
    }
  }
  // Heavy pairs dominate on random instances; the partition branch may be rare.
  MESSAGE("partition step applied on " << partitioned << " of 60 instances");
}

TEST_CASE("sunflowers") {
  const auto h = hg({"1 2 3", "1 2 4", "1 2 5", "1 2 6"});
  const auto w = sunflower_find(h);
  REQUIRE(w);
  CHECK(h.format_set(w->core) == "1,2");
  CHECK(w->petals.size() == 4);
  CHECK(is_sunflower(h, *w));
  const auto k = sunflower_compress(h, *w, 2);
  CHECK(k.edge_count() == 1);
  CHECK(k.format_set(k.edge(0)) == "1,2,t1");
  CHECK_FALSE(sunflower_find(gen_g42_witness()));

  SunflowerWitness bad{{vs(h, "1 2 3"), vs(h, "1 2 4")}, vs(h, "1 2")};
  CHECK(kind_of([&] { sunflower_compress(h, bad, 2); }) == ErrorKind::InvalidCertificate);
}

TEST_CASE("sunflower compression keeps other edges and raises no tau*") {
  const auto h = hg({"1 2 3 4", "1 2 3 5", "1 2 3 6", "1 2 3 7", "1 2 3 8", "1 2 4 5", "1 3 4 6"});
  REQUIRE(oracle::nu(h, 2) == 1);
  const auto w = sunflower_find(h);
  REQUIRE(w);
  const auto k = sunflower_compress(h, *w, 2);
  CHECK(k.edge_count() == h.edge_count() - w->petals.size() + 1);
  CHECK(oracle::nu(k, 2) == 1);
  CHECK(tau_star(k, 2).value >= tau_star(h, 2).value);
}

TEST_CASE("family model of the seven-cycle instance") {
  const auto inst = gen_tripartite_7cycle();
  const auto f = to_family(inst.graph, inst.parts);
  REQUIRE(f.size() == 2);
  CHECK(f.families[0].size() == 4);
  CHECK(f.families[1].size() == 3);
  CHECK(family_nu2(f) == 3);
  CHECK(family_tau2(f) == 4);
  CHECK(from_family(f) == inst.graph);

  const auto one = parse_instance_string("@class A: a\n@class B: b\n@class C: c\na b c\n");
  const auto g = to_family(one.graph, *one.parts);
  CHECK(g.size() == 1);
  CHECK(g.families[0] == std::vector<BcEdge>{{0, 0}});
  CHECK(kind_of([&] { to_family(gen_star(6), PartiteStructure{}); }) == ErrorKind::StructureError);
}

TEST_CASE("family values in small cases") {
  const auto same = EdgeFamilySeq::make(1, 1, {{{0, 0}}, {{0, 0}}});
  CHECK(family_nu2(same) == 1);
  CHECK(family_tau2(same) == 1);
  const auto apart = EdgeFamilySeq::make(2, 2, {{{0, 0}}, {{1, 1}}});
  const auto r = tunu_construct(apart);
  CHECK(r.trace.n == 0);
  CHECK_FALSE(r.trace.alpha1);
  CHECK(r.cover.size() == 2);
  CHECK(is_family_cover(apart, r.cover));
  CHECK(family_nu2(apart) == 2);
}

TEST_CASE("property: family model equals the hypergraph values") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    XorShift64Star rng(seed);
    std::vector<std::size_t> sizes = {rng.between(1, 3), rng.between(1, 3), rng.between(1, 3)};
    const std::size_t total = sizes[0] * sizes[1] * sizes[2];
    const auto inst = gen_random_partite(3, sizes, rng.between(1, std::min<std::size_t>(total, 12)), seed);
    for (std::size_t a = 0; a < 3; ++a) {
      const auto f = to_family(inst.graph, inst.parts, a);
      CHECK(from_family(f) == inst.graph);
      CHECK(family_nu2(f) == oracle::nu(inst.graph, 2));
      CHECK(family_tau2(f) == oracle::tau(inst.graph, 2));
      if (f.size() == 1) CHECK(family_nu2(f) == family_tau2(f));
      if (f.size() == 2) CHECK(3 * oracle::tau(inst.graph, 2) <= 5 * oracle::nu(inst.graph, 2));
    }
  }
}

TEST_CASE("property: identical families have equal nu and tau") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    XorShift64Star rng(seed * 29);
    const std::size_t bs = rng.between(1, 3), cs = rng.between(1, 3), p = rng.between(1, 3);
    std::vector<BcEdge> fam;
    for (std::uint32_t b = 0; b < bs; ++b)
      for (std::uint32_t c = 0; c < cs; ++c)
        if (rng.below(2)) fam.emplace_back(b, c);
    const auto f = EdgeFamilySeq::make(bs, cs, std::vector<std::vector<BcEdge>>(p, fam));
    CHECK(family_nu2(f) == family_tau2(f));
    // The same statement read on the hypergraph: identical links in class A.
    const auto h = from_family(f);
    if (h.edge_count() > 0) CHECK(tau_int(h, 2).value == nu_int(h, 2).value);
  }
}

TEST_CASE("property: the 5/3 construction") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    XorShift64Star rng(seed * 41);
    auto f = random_pair(rng);
    if (seed % 5 == 0) f.families[1] = f.families[0];
    const auto r = tunu_construct(f);
    const auto nu = family_nu2(f);
    const auto tau = family_tau2(f);
    CHECK(is_family_cover(f, r.cover));
    CHECK(r.cover.size() == r.trace.n + r.trace.ell1 + r.trace.ell2);
    CHECK(r.trace.ell1 >= r.trace.ell2);
    CHECK(r.trace.lower_bound <= nu);
    CHECK(tau <= r.cover.size());
    CHECK(3 * r.cover.size() <= 5 * nu);
    if (f.families[0] == f.families[1]) CHECK(nu == tau);
  }
}

TEST_CASE("mimic analysis") {
  const auto inst = gen_tripartite_7cycle();
  const auto r = mimic_cover(inst.graph, inst.parts);
  CHECK(is_fractional_cover(inst.graph, r.cover));
  CHECK(r.cover.total() <= make_rat(27, 5));
  CHECK(tau_star(inst.graph, 2).value <= r.cover.total());
  CHECK(r.analysis.n() == 3);
  CHECK(r.analysis.trace(inst.graph).find("M1") != std::string::npos);

  const auto one = parse_instance_string("@class A: a\n@class B: b\n@class C: c\na b c\n");
  const auto s = mimic_cover(one.graph, *one.parts);
  CHECK(s.analysis.t() == 0);
  CHECK(s.g2_total == 3);
  CHECK(s.g1_total == make_rat(3, 2));
  CHECK_FALSE(s.integral);

  CHECK(kind_of([] { mimic_cover(gen_star(6), PartiteStructure{}); }) == ErrorKind::StructureError);
}

TEST_CASE("property: mimic cover bound on partite instances") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    XorShift64Star rng(seed * 43);
    const std::size_t k = seed % 4 == 0 ? 4 : 3;
    std::vector<std::size_t> sizes;
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
      sizes.push_back(rng.between(1, 3));
      total *= sizes.back();
    }
    const auto inst = gen_random_partite(k, sizes, rng.between(1, std::min<std::size_t>(total, 14)), seed);
    const auto r = mimic_cover(inst.graph, inst.parts);
    const auto nu = nu_int(inst.graph, k - 1).value;
    CHECK(is_fractional_cover(inst.graph, r.cover));
    CHECK(r.cover.total() * static_cast<long>(2 * k - 1) <= Rat(static_cast<long>(k * k * nu)));
    CHECK(tau_star(inst.graph, k - 1).value <= r.cover.total());
  }
}
