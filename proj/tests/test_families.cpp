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

#include <map>
#include <set>

#include "helpers.hpp"
#include "mcover/derived.hpp"
#include "mcover/error.hpp"
#include "mcover/families.hpp"
#include "mcover/fractional.hpp"
#include "mcover/integral.hpp"
#include "mcover/structure.hpp"
#include "oracles.hpp"

using namespace mcover;
using testutil::hg;

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

// Direct axiom check: every two points on exactly one line, every two lines
// meeting in exactly one point.
bool plane_axioms(const Hypergraph& p) {
  const std::size_t n = p.vertex_count();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      std::size_t lines = 0;
      for (const auto& l : p.edges())
        lines += std::count(l.begin(), l.end(), a) && std::count(l.begin(), l.end(), b);
      if (lines != 1) return false;
    }
  for (std::size_t i = 0; i < p.edge_count(); ++i)
    for (std::size_t j = i + 1; j < p.edge_count(); ++j)
      if (intersection_size(p.edge(i), p.edge(j)) != 1) return false;
  return true;
}

}  // namespace

TEST_CASE("star") {
  CHECK(gen_star(6).edge_count() == 10);
  CHECK(gen_star(4).edge_count() == 3);
  for (const auto& e : gen_star(8).edges()) CHECK(e.front() == gen_star(8).find_vertex("1"));
  CHECK(kind_of([] { gen_star(5); }) == ErrorKind::ParameterError);
  CHECK(kind_of([] { gen_star(2); }) == ErrorKind::ParameterError);
  const auto s8 = gen_star(8);
  const Rat ratio = Rat(static_cast<long>(tau_int(s8, 2).value)) / tau_star(s8, 2).value;
  CHECK(ratio == make_rat(12, 7));
}

TEST_CASE("complete subsets with removals") {
  const auto one = gen_complete_subsets(5, 3, {{1, 2, 3}});
  CHECK(one.edge_count() == 9);
  const auto two = gen_complete_subsets(5, 3, {{1, 2, 3}, {1, 4, 5}});
  CHECK(two.edge_count() == 8);
  for (const auto& h : {one, two}) {
    CHECK(nu_int(h, 2).value == 2);
    CHECK(tau_int(h, 2).value == 4);
  }
  const auto k5 = gen_complete_subsets(5, 4);
  CHECK(tau_int(k5, 3).value == 3);
  CHECK(nu_int(k5, 3).value == 1);
  // C([4],3) minus a triple is a star on four vertices.
  const auto small = gen_complete_subsets(4, 3, {{1, 2, 3}});
  CHECK(small.edge_count() == 3);
  CHECK(contains_copy(small, gen_star(4)));
  CHECK(contains_copy(gen_star(4), small));
  CHECK(kind_of([] { gen_complete_subsets(5, 3, {{1, 2}}); }) == ErrorKind::ParameterError);
  CHECK(kind_of([] { gen_complete_subsets(5, 3, {{1, 2, 9}}); }) == ErrorKind::ParameterError);
  CHECK(kind_of([] { gen_complete_subsets(3, 4); }) == ErrorKind::ParameterError);
}

TEST_CASE("projective planes") {
  const auto fano = gen_projective_plane(2);
  CHECK(fano.lines.vertex_count() == 7);
  CHECK(fano.lines.edge_count() == 7);
  CHECK(fano.lines.uniformity() == 3);
  const auto p3 = gen_projective_plane(3);
  CHECK(p3.lines.vertex_count() == 13);
  CHECK(p3.lines.edge_count() == 13);
  CHECK(p3.lines.uniformity() == 4);
  for (std::size_t q : {2, 3, 5}) {
    const auto p = gen_projective_plane(q);
    CHECK(p.lines.edge_count() == q * q + q + 1);
    CHECK(plane_axioms(p.lines));
    CHECK(satisfies_plane_axioms(p.lines));
  }
  CHECK_FALSE(satisfies_plane_axioms(gen_star(6)));
  CHECK(kind_of([] { gen_projective_plane(4); }) == ErrorKind::ParameterError);
  CHECK(kind_of([] { gen_projective_plane(1); }) == ErrorKind::ParameterError);
}

TEST_CASE("joins") {
  const auto fano = gen_projective_plane(2).lines;
  const auto j2 = join({fano, fano});
  CHECK(j2.edge_count() == 49);
  CHECK(j2.uniformity() == 6);
  CHECK(j2.vertex_count() == 14);
  CHECK(nu_int(j2, 2).value == 1);

  const auto single = join({hg({"1 2"}), hg({"x y z"})});
  CHECK(single.edge_count() == 1);
  CHECK(single.uniformity() == 5);

  const auto j3 = join({fano, fano, fano});
  CHECK(j3.edge_count() == 343);
  CHECK(j3.uniformity() == 9);
  // With three parts a line of one copy is a 3-set lying in 7 * 7 edges, so
  // the constant 1/27 weighting overloads it and must be rejected.
  WeightFn w3(WeightKind::Matching, 3);
  for (const auto& e : j3.edges()) w3.set(e, make_rat(1, 27));
  CHECK_FALSE(is_fractional_matching(j3, w3));
  CHECK(kind_of([&] { join_fractional_matching(j3, 3, 2); }) == ErrorKind::StructureError);

  CHECK(kind_of([] { join({}); }) == ErrorKind::ParameterError);
  CHECK(kind_of([] { join({hg({"1 2"}), Hypergraph::from_tokens({}, {}, 2)}); }) == ErrorKind::ParameterError);
  CHECK(kind_of([&] { join_fractional_matching(gen_star(6), 2, 2); }) == ErrorKind::StructureError);
}

TEST_CASE("constant weighting on joins of planes") {
  const auto fano = gen_projective_plane(2).lines;
  CHECK(join_fractional_matching(join({fano, fano}), 2, 2).total() == make_rat(49, 9));
  CHECK(join_fractional_matching(join({fano}), 1, 2).total() == make_rat(7, 3));

  const auto p3 = gen_projective_plane(3).lines;
  const auto j = join({p3, p3});
  const auto w = join_fractional_matching(j, 2, 3);
  CHECK(w.total() == make_rat(169, 16));
  // Feasibility by direct incidence counting over all pairs.
  std::map<VertexSet, Rat> load;
  for (const auto& [e, x] : w.support())
    for (const auto& p : subsets_of_size(e, 2)) load[p] += x;
  for (const auto& [p, x] : load) CHECK(x <= 1);
}

TEST_CASE("seven-edge 4-uniform witness") {
  const auto h = gen_g42_witness();
  CHECK(h.edge_count() == 7);
  CHECK(h.vertex_count() == 7);
  CHECK(h.format_set(h.edge(0)) == "a,b,c,d");
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j) CHECK(intersection_size(h.edge(i), h.edge(j)) == 2);
  CHECK(oracle::nu(h, 2) == 1);
  CHECK(oracle::tau(h, 2) == 4);
}

TEST_CASE("tripartite seven-cycle instance") {
  const auto inst = gen_tripartite_7cycle();
  const auto expected = hg({"a1 b1 c1", "a1 b1 c2", "a1 b2 c2", "a2 b2 c2", "a2 b2 c1", "a2 b3 c1", "a1 b3 c1"});
  CHECK(inst.graph.token_edges() == expected.token_edges());
  CHECK(inst.parts.is_valid_for(inst.graph));
  CHECK(oracle::nu(inst.graph, 2) == 3);
  CHECK(oracle::tau(inst.graph, 2) == 4);
  // Blocks of H^(2) meet along a single 7-cycle.
  const auto d = derive(inst.graph, 2);
  const auto inc = d.incidence();
  std::vector<std::set<std::size_t>> nbr(d.blocks.size());
  for (const auto& blocks : inc)
    for (auto a : blocks)
      for (auto b : blocks)
        if (a != b) nbr[a].insert(b);
  for (const auto& s : nbr) CHECK(s.size() == 2);
  std::set<std::size_t> seen = {0};
  std::vector<std::size_t> stack = {0};
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : nbr[v])
      if (seen.insert(w).second) stack.push_back(w);
  }
  CHECK(seen.size() == 7);
}

TEST_CASE("seeded random instances") {
  CHECK(gen_random(3, 7, 10, 1) == gen_random(3, 7, 10, 1));
  CHECK(gen_random(3, 7, 10, 1).edge_count() == 10);
  CHECK(gen_random(3, 7, 35, 5) == gen_complete_subsets(7, 3));
  CHECK(kind_of([] { gen_random(3, 7, 36, 1); }) == ErrorKind::ParameterError);

  const auto inst = gen_random_partite(3, {2, 3, 2}, 7, 3);
  CHECK(inst.graph.edge_count() == 7);
  CHECK(inst.parts.is_valid_for(inst.graph));
  CHECK(gen_random_partite(3, {2, 3, 2}, 7, 3).graph == inst.graph);
  CHECK(kind_of([] { gen_random_partite(3, {2, 3, 2}, 13, 3); }) == ErrorKind::ParameterError);

  const auto g = gen_random_bipartite(3, 4, 5, 2);
  CHECK(g.edge_count() == 5);
  CHECK(g.has_bipartition());
  CHECK(kind_of([] { gen_random_bipartite(2, 2, 5, 1); }) == ErrorKind::ParameterError);
}

TEST_CASE("property: random samples are duplicate-free and in range") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    XorShift64Star rng(seed);
    const std::size_t k = rng.between(1, 4), n = rng.between(k, k + 4);
    const std::size_t edges = rng.between(0, std::min<std::size_t>(binomial(n, k), 20));
    const auto h = gen_random(k, n, edges, seed);
    CHECK(h.edge_count() == edges);
    for (const auto& e : h.edges())
      for (Vertex v : e) CHECK(std::stoul(h.token(v)) <= n);
  }
}

TEST_CASE("generate from a spec") {
  GenSpec spec{"star", {{"n", 6}}, std::nullopt};
  CHECK(spec.describe() == "star n=6");
  CHECK(generate(spec).graph == gen_star(6));
  GenSpec random{"random", {{"k", 3}, {"n", 7}, {"edges", 10}}, 1};
  CHECK(random.describe() == "random edges=10 k=3 n=7 seed=1");
  CHECK(generate(random).graph == gen_random(3, 7, 10, 1));
  GenSpec partite{"partite", {{"k", 3}, {"s1", 2}, {"s2", 3}, {"s3", 2}, {"edges", 7}}, 3};
  const auto inst = generate(partite);
  REQUIRE(inst.parts);
  CHECK(inst.parts->classes.size() == 3);
  CHECK(generate({"tripartite7", {}, std::nullopt}).class_names == std::vector<std::string>{"A", "B", "C"});
  CHECK(generate({"fano-minus-line", {}, std::nullopt}).graph.edge_count() == 6);
  CHECK(generate({"join-planes", {{"q", 2}}, std::nullopt}).graph.edge_count() == 49);
  CHECK(kind_of([] { generate({"nope", {}, std::nullopt}); }) == ErrorKind::ParameterError);
  CHECK(kind_of([] { generate({"star", {}, std::nullopt}); }) == ErrorKind::ParameterError);
}
