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

#include <set>

#include "helpers.hpp"
#include "mcover/derived.hpp"
#include "mcover/error.hpp"
#include "mcover/families.hpp"
#include "mcover/limits.hpp"
#include "mcover/structure.hpp"
#include "mcover/text_format.hpp"
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

std::vector<std::string> formatted(const Hypergraph& h, const std::vector<VertexSet>& sets) {
  std::vector<std::string> out;
  for (const auto& s : sets) out.push_back(h.format_set(s, ' '));
  return out;
}

}  // namespace

TEST_CASE("vertex tokens order by length then value") {
  CHECK(VertexId{"9"} < VertexId{"10"});
  CHECK(VertexId{"a"} < VertexId{"b"});
  CHECK(VertexId{"b"} < VertexId{"aa"});
  const auto h = hg({"10 9 2"});
  CHECK(h.format_set(h.edge(0)) == "2,9,10");
}

TEST_CASE("hypergraph construction rejects malformed input") {
  CHECK(kind_of([] { hg({"1 2 3", "1 2"}); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { hg({"1 1 2"}); }) == ErrorKind::ParseError);
  const auto h = hg({"1 2 3", "3 2 1"});
  CHECK(h.edge_count() == 1);
  CHECK(kind_of([&] { h.to_set({"7"}); }) == ErrorKind::InvalidCertificateReference);
}

TEST_CASE("derive: two triples through a vertex") {
  const auto h = hg({"1 2 3", "1 4 5"});
  const auto d = derive(h, 2);
  CHECK(formatted(h, d.ground) == std::vector<std::string>{"1 2", "1 3", "1 4", "1 5", "2 3", "4 5"});
  REQUIRE(d.blocks.size() == 2);
  std::vector<VertexSet> first, second;
  for (auto g : d.blocks[0]) first.push_back(d.ground[g]);
  for (auto g : d.blocks[1]) second.push_back(d.ground[g]);
  CHECK(formatted(h, first) == std::vector<std::string>{"1 2", "1 3", "2 3"});
  CHECK(formatted(h, second) == std::vector<std::string>{"1 4", "1 5", "4 5"});
}

TEST_CASE("derive: m = k is the identity") {
  const auto h = hg({"1 2 3"});
  const auto d = derive(h, 3);
  CHECK(d.ground.size() == 1);
  CHECK(d.blocks.size() == 1);
  CHECK(h.format_set(d.ground[0]) == "1,2,3");
}

TEST_CASE("derive: star(6) against direct pair enumeration") {
  const auto h = gen_star(6);
  const auto d = derive(h, 2);
  CHECK(d.blocks.size() == 10);
  std::set<std::pair<Vertex, Vertex>> pairs;
  for (const auto& e : h.edges())
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j) pairs.insert({e[i], e[j]});
  CHECK(d.ground.size() == pairs.size());
  for (const auto& b : d.blocks) CHECK(b.size() == 3);
}

TEST_CASE("derive: order out of range") {
  const auto h = hg({"1 2 3"});
  CHECK(kind_of([&] { derive(h, 4); }) == ErrorKind::OrderOutOfRange);
  CHECK(kind_of([&] { derive(h, 0); }) == ErrorKind::OrderOutOfRange);
}

TEST_CASE("derive: incidence guard") {
  Limits tight;
  tight.derived_incidences = 5;
  CHECK(kind_of([&] { derive(gen_star(6), 2, tight); }) == ErrorKind::SizeLimitExceeded);
}

TEST_CASE("is_m_matching") {
  const auto star = gen_star(6);
  CHECK(is_m_matching(star, {vs(star, "1 2 3"), vs(star, "1 4 5")}, 2));
  CHECK(is_m_matching(star, {vs(star, "1 2 3")}, 2));
  const auto h = hg({"1 2 3", "1 2 4"});
  CHECK_FALSE(is_m_matching(h, h.edges(), 2));
  CHECK(is_m_matching(h, h.edges(), 3));
  CHECK(kind_of([&] { is_m_matching(h, {vs(h, "1 3 4")}, 2); }) == ErrorKind::InvalidCertificateReference);
}

TEST_CASE("is_m_cover") {
  const auto star = gen_star(6);
  // A cover of size n-2 = 4 exists, confirmed by exhaustive search.
  CHECK(oracle::tau(star, 2) == 4);
  CHECK(is_m_cover(star, {vs(star, "1 2"), vs(star, "1 3"), vs(star, "1 4"), vs(star, "1 5")}, 2));
  CHECK_FALSE(is_m_cover(star, {vs(star, "1 2"), vs(star, "1 3"), vs(star, "1 4")}, 2));
  CHECK_FALSE(is_m_cover(star, {}, 2));
  const auto single = hg({"1 2 3 4"});
  CHECK(is_m_cover(single, subsets_of_size(single.edge(0), 3), 3));
  CHECK(kind_of([&] { is_m_cover(single, {vs(single, "1 2 3")}, 2); }) == ErrorKind::MalformedCover);
}

TEST_CASE("triangle hypergraph") {
  CHECK(triangle_hypergraph(complete_graph(4)).edge_count() == 4);
  CHECK(triangle_hypergraph(cycle_graph(5)).edge_count() == 0);
  CHECK(triangle_hypergraph(cycle_graph(5)).vertex_count() == 5);
  CHECK(triangle_hypergraph(complete_graph(5)).edge_count() == 10);
}

TEST_CASE("linearity") {
  CHECK(is_linear(gen_projective_plane(2).lines));
  CHECK_FALSE(is_linear(hg({"1 2 3", "1 2 4"})));
  CHECK_FALSE(is_linear(triangle_hypergraph(complete_graph(5))));
}

TEST_CASE("contains_copy") {
  const auto fano = gen_projective_plane(2).lines;
  const auto pattern = fano.filter_edges([](std::size_t i) { return i != 0; });
  const auto map = contains_copy(fano, pattern);
  REQUIRE(map);
  for (const auto& e : pattern.edges()) {
    VertexSet image;
    for (Vertex v : e) image.push_back((*map)[v]);
    std::sort(image.begin(), image.end());
    CHECK(fano.has_edge(image));
  }
  CHECK_FALSE(contains_copy(gen_star(6), pattern));
  CHECK(contains_copy(pattern, pattern));
  CHECK(contains_copy(gen_g42_witness(), gen_g42_witness()));
  const auto big = gen_complete_subsets(10, 3);
  CHECK(kind_of([&] { contains_copy(big, big); }) == ErrorKind::SizeLimitExceeded);
}

TEST_CASE("derived maximum degree") {
  CHECK(derived_max_degree(hg({"1 2 3", "1 2 4"}), 2) == 2);
  CHECK(derived_max_degree(hg({"1 2 3 4"}), 1) == 1);
  CHECK(derived_max_degree(hg({"1 2 3 4"}), 3) == 1);
  CHECK(derived_max_degree(gen_star(6), 2) == 4);
}

TEST_CASE("property: derived blocks, matchings and covers agree with definitions") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    XorShift64Star rng(seed);
    const std::size_t k = rng.between(2, 4);
    const std::size_t n = rng.between(k + 1, k + 3);
    const std::size_t edges = rng.between(1, std::min<std::size_t>(binomial(n, k), 9));
    const auto h = gen_random(k, n, edges, seed);
    const std::size_t m = rng.between(1, k);
    const auto d = derive(h, m);
    REQUIRE(d.blocks.size() == h.edge_count());
    std::set<std::size_t> used;
    for (const auto& b : d.blocks) {
      CHECK(b.size() == binomial(k, m));
      used.insert(b.begin(), b.end());
    }
    CHECK(used.size() == d.ground.size());

    // Random edge subset: matching iff blocks pairwise disjoint.
    std::vector<VertexSet> subset;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < h.edge_count(); ++i)
      if (rng.below(2)) {
        subset.push_back(h.edge(i));
        idx.push_back(i);
      }
    bool disjoint = true;
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b)
        for (auto g : d.blocks[idx[a]])
          if (std::count(d.blocks[idx[b]].begin(), d.blocks[idx[b]].end(), g)) disjoint = false;
    CHECK(is_m_matching(h, subset, m) == disjoint);

    // Random ground subset: cover iff it meets every block.
    std::vector<VertexSet> chosen;
    std::set<std::size_t> chosen_idx;
    for (std::size_t g = 0; g < d.ground.size(); ++g)
      if (rng.below(3) == 0) {
        chosen.push_back(d.ground[g]);
        chosen_idx.insert(g);
      }
    bool transversal = true;
    for (const auto& b : d.blocks) {
      bool hit = false;
      for (auto g : b) hit = hit || chosen_idx.count(g);
      transversal = transversal && hit;
    }
    CHECK(is_m_cover(h, chosen, m) == transversal);
  }
}

TEST_CASE("property: triangle count matches brute force") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    XorShift64Star rng(seed);
    const std::size_t n = rng.between(3, 8);
    std::vector<SimpleGraph::EdgeT> edges;
    for (std::uint32_t u = 0; u < n; ++u)
      for (std::uint32_t v = u + 1; v < n; ++v)
        if (rng.below(2)) edges.emplace_back(u, v);
    const SimpleGraph g(n, edges);
    std::size_t count = 0;
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = a + 1; b < n; ++b)
        for (std::uint32_t c = b + 1; c < n; ++c)
          count += g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c);
    CHECK(triangle_hypergraph(g).edge_count() == count);
  }
}

TEST_CASE("simple graph validation") {
  CHECK(kind_of([] { SimpleGraph(3, {{0, 0}}); }) == ErrorKind::ParameterError);
  CHECK(kind_of([] { SimpleGraph(3, {{0, 1}, {1, 0}}); }) == ErrorKind::ParameterError);
  CHECK(kind_of([] { complete_graph(3).side(); }) == ErrorKind::StructureError);
}

TEST_CASE("text format: comments, classes and round trip") {
  const std::string text =
      "# a comment\n"
      "@class A: a1 a2\n"
      "@class B: b1\n"
      "@class C: c1 c2\n"
      "a1 b1 c1\n"
      "\n"
      "a2 b1 c2  # trailing\n";
  const auto inst = parse_instance_string(text);
  CHECK(inst.graph.edge_count() == 2);
  REQUIRE(inst.parts);
  CHECK(inst.parts->classes.size() == 3);
  CHECK(inst.class_names == std::vector<std::string>{"A", "B", "C"});
  const auto again = parse_instance_string(instance_to_string(inst.graph, inst.parts));
  CHECK(again.graph == inst.graph);
  CHECK(kind_of([] { parse_instance_string("1 2 3\n1 2\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_instance_string("# nothing\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_instance_string("@class A: a1\n@class B: b1\na1 b2\n"); }) == ErrorKind::ParseError);
}

TEST_CASE("partite structure validation") {
  const auto inst = gen_tripartite_7cycle();
  CHECK(inst.parts.is_valid_for(inst.graph));
  PartiteStructure merged{{inst.parts.classes[0], set_union(inst.parts.classes[1], inst.parts.classes[2])}};
  CHECK_FALSE(merged.is_valid_for(inst.graph));
  CHECK(kind_of([&] { merged.validate(inst.graph); }) == ErrorKind::StructureError);
}

TEST_CASE("limits parsing") {
  const auto l = Limits::parse("nonzeros=10,search_nodes=7");
  CHECK(l.lp_nonzeros == 10);
  CHECK(l.search_nodes == 7);
  CHECK(l.bruteforce_edges == Limits{}.bruteforce_edges);
  CHECK(kind_of([] { Limits::parse("bogus=1"); }) == ErrorKind::ParameterError);
  CHECK(kind_of([] { Limits::parse("nonzeros=x"); }) == ErrorKind::ParameterError);
}
