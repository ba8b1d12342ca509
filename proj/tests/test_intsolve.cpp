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
#include "mcover/bipartite.hpp"
#include "mcover/derived.hpp"
#include "mcover/error.hpp"
#include "mcover/families.hpp"
#include "mcover/integral.hpp"
#include "oracles.hpp"

using namespace mcover;

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

// Solver answers count only when their certificates check.
std::size_t checked_tau(const Hypergraph& h, std::size_t m, const Limits& limits = {}) {
  const auto r = tau_int(h, m, limits);
  CHECK(r.cert.size() == r.value);
  CHECK(is_m_cover(h, r.cert.msets, m));
  return r.value;
}

std::size_t checked_nu(const Hypergraph& h, std::size_t m) {
  const auto r = nu_int(h, m);
  CHECK(r.cert.size() == r.value);
  for (const auto& e : r.cert.edges) CHECK(h.has_edge(e));
  CHECK(is_m_matching(h, r.cert.edges, m));
  return r.value;
}

SimpleGraph k_mn(std::size_t a, std::size_t b) {
  std::vector<GraphEdge> edges;
  for (std::uint32_t i = 0; i < a; ++i)
    for (std::uint32_t j = 0; j < b; ++j) edges.emplace_back(i, j);
  return SimpleGraph::bipartite(a, b, edges);
}

}  // namespace

TEST_CASE("tau and nu: named instances") {
  CHECK(checked_tau(gen_star(6), 2) == 4);
  CHECK(checked_nu(gen_star(6), 2) == 2);
  CHECK(checked_tau(gen_g42_witness(), 2) == 4);
  CHECK(checked_nu(gen_g42_witness(), 2) == 1);
  CHECK(checked_tau(gen_complete_subsets(5, 4), 3) == 3);
  CHECK(checked_nu(gen_complete_subsets(5, 4), 3) == 1);
  CHECK(checked_nu(gen_tripartite_7cycle().graph, 2) == 3);
  CHECK(checked_tau(gen_tripartite_7cycle().graph, 2) == 4);
  const auto minus_one = gen_complete_subsets(5, 3, {{1, 2, 3}});
  CHECK(checked_nu(minus_one, 2) == 2);
  CHECK(checked_tau(minus_one, 2) == 4);
}

TEST_CASE("tau and nu: star family") {
  for (std::size_t n : {4, 6, 8}) {
    CHECK(checked_tau(gen_star(n), 2) == n - 2);
    CHECK(checked_nu(gen_star(n), 2) == (n - 2) / 2);
  }
}

TEST_CASE("property: exact solvers agree with exhaustive search") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    XorShift64Star rng(seed * 3);
    const std::size_t k = rng.between(2, 4);
    const std::size_t n = rng.between(k + 1, k + 4);
    const std::size_t edges = rng.between(1, std::min<std::size_t>(binomial(n, k), 12));
    const auto h = gen_random(k, n, edges, seed);
    const std::size_t m = rng.between(1, k);
    const auto tau = checked_tau(h, m);
    const auto nu = checked_nu(h, m);
    CHECK(tau == oracle::tau(h, m));
    CHECK(nu == oracle::nu(h, m));
    CHECK(nu <= tau);
    CHECK(tau <= binomial(k, m) * nu);
    if (k == 3 && m == 2) CHECK(23 * tau <= 66 * nu);
  }
}

TEST_CASE("tau without the LP root bound gives the same answers") {
  Limits no_lp;
  no_lp.lp_bound_nonzeros = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto h = gen_random(3, 7, 12, seed);
    CHECK(checked_tau(h, 2, no_lp) == tau_int(h, 2).value);
  }
}

TEST_CASE("node limit") {
  Limits tight;
  tight.search_nodes = 1;
  tight.lp_bound_nonzeros = 0;
  CHECK(kind_of([&] { tau_int(gen_complete_subsets(7, 3), 2, tight); }) == ErrorKind::SizeLimitExceeded);
}

TEST_CASE("bipartite matching and cover") {
  const auto c4 = SimpleGraph::bipartite(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  auto r = bip_matching_cover(c4);
  CHECK(r.matching.size() == 2);
  CHECK(r.cover.size() == 2);
  r = bip_matching_cover(k_mn(1, 3));
  CHECK(r.matching.size() == 1);
  CHECK(r.cover.size() == 1);
  CHECK(kind_of([] { bip_matching_cover(complete_graph(3)); }) == ErrorKind::StructureError);

  const auto g = gen_random_bipartite(5, 5, 12, 7);
  r = bip_matching_cover(g);
  CHECK(r.matching.size() == r.cover.size());
  CHECK(r.matching.size() == oracle::p_factor(g, 1));
  CHECK(r.cover.size() == oracle::vertex_cover(g));
}

TEST_CASE("property: Koenig duality with valid certificates") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    XorShift64Star rng(seed);
    const std::size_t a = rng.between(1, 5), b = rng.between(1, 5);
    const auto g = gen_random_bipartite(a, b, rng.between(0, std::min<std::size_t>(a * b, 14)), seed);
    const auto r = bip_matching_cover(g);
    CHECK(r.matching.size() == r.cover.size());
    std::vector<int> deg(g.vertex_count(), 0);
    for (auto [u, v] : r.matching) {
      CHECK(g.adjacent(u, v));
      CHECK(++deg[u] == 1);
      CHECK(++deg[v] == 1);
    }
    for (auto [u, v] : g.edges())
      CHECK((std::count(r.cover.begin(), r.cover.end(), u) || std::count(r.cover.begin(), r.cover.end(), v)));
    CHECK(r.matching.size() == oracle::p_factor(g, 1));
  }
}

TEST_CASE("p-factors") {
  CHECK(p_factor_max(k_mn(3, 3), 2).size() == 6);
  CHECK(oracle::p_factor(k_mn(3, 3), 2) == 6);
  CHECK(p_factor_max(k_mn(1, 3), 2).size() == 2);
  CHECK(p_factor_max(k_mn(3, 4), 4).size() == 12);
  CHECK(kind_of([] { p_factor_max(k_mn(2, 2), 0); }) == ErrorKind::ParameterError);
  CHECK(kind_of([] { p_factor_max(complete_graph(3), 1); }) == ErrorKind::StructureError);
}

TEST_CASE("min over Z of |Z| + p tau(G - Z)") {
  CHECK(min_z_value(k_mn(1, 3), 2).value == 2);
  CHECK(min_z_value(k_mn(3, 3), 2).value == 6);
  CHECK(min_z_value(SimpleGraph::bipartite(2, 2, {}), 3).value == 0);
  Limits tight;
  tight.bruteforce_edges = 5;
  CHECK(kind_of([&] { min_z_value(k_mn(3, 3), 1, tight); }) == ErrorKind::SizeLimitExceeded);
}

TEST_CASE("property: p-factor identity and brute force") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    XorShift64Star rng(seed * 11);
    const std::size_t a = rng.between(1, 4), b = rng.between(1, 4);
    const auto g = gen_random_bipartite(a, b, rng.between(0, std::min<std::size_t>(a * b, 12)), seed);
    for (std::size_t p = 1; p <= 3; ++p) {
      const auto f = p_factor_max(g, p);
      std::vector<std::size_t> deg(g.vertex_count(), 0);
      for (auto [u, v] : f) {
        CHECK(++deg[u] <= p);
        CHECK(++deg[v] <= p);
      }
      CHECK(f.size() == oracle::p_factor(g, p));
      const auto z = min_z_value(g, p);
      CHECK(z.value == f.size());
    }
  }
}
