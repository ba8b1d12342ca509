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

#include "mcover/verify.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <queue>
#include <sstream>

#include "mcover/bipartite.hpp"
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

namespace mcover {

namespace {

// Every (tau*, nu*) pair computed by the suite passes through here.
struct DualityTally {
  std::size_t pairs = 0;
  std::size_t mismatched = 0;
  std::size_t slack_failures = 0;
};

struct Context {
  const Limits& limits;
  DualityTally tally;

  Rat fractional(const Hypergraph& h, std::size_t m) {
    const auto cover = tau_star(h, m, limits);
    const auto matching = nu_star(h, m, limits);
    ++tally.pairs;
    if (cover.value != matching.value) ++tally.mismatched;
    if (!check_slackness(cover.cover, matching.matching, derive(h, m, limits))) ++tally.slack_failures;
    return cover.value;
  }
};

std::string ratio_count(std::size_t good, std::size_t total) {
  return std::to_string(good) + "/" + std::to_string(total);
}

std::string yes(bool b) { return b ? "true" : "false"; }

std::size_t combos(std::size_t n, std::size_t k) { return static_cast<std::size_t>(binomial(n, k)); }

struct Row {
  std::string claim, expected, observed, note;
};

Row check_example1(Context& ctx) {
  Row row{"star hypergraphs: tau = n-2, nu = (n-2)/2, tau* = (n-1)/2", "", "", ""};
  for (std::size_t n : {4, 6, 8}) {
    const auto h = gen_star(n);
    const std::string sep = row.expected.empty() ? "" : "; ";
    row.expected += sep + "n=" + std::to_string(n) + " tau=" + std::to_string(n - 2) + " nu=" +
                    std::to_string((n - 2) / 2) + " tau*=" + to_string(make_rat(static_cast<long>(n) - 1, 2));
    row.observed += sep + "n=" + std::to_string(n) + " tau=" + std::to_string(tau_int(h, 2, ctx.limits).value) +
                    " nu=" + std::to_string(nu_int(h, 2, ctx.limits).value) + " tau*=" + to_string(ctx.fractional(h, 2));
  }
  return row;
}

Row check_g42(Context& ctx) {
  const auto h = gen_g42_witness();
  const auto cover = g42_cover(h, ctx.limits);
  Row row{"seven-edge 4-uniform witness: nu = 1, tau = 4, pair construction gives 4", "", "", ""};
  row.expected = "nu=1 tau=4 construction=4 valid=true";
  row.observed = "nu=" + std::to_string(nu_int(h, 2, ctx.limits).value) +
                 " tau=" + std::to_string(tau_int(h, 2, ctx.limits).value) +
                 " construction=" + std::to_string(cover.cover.size()) +
                 " valid=" + yes(is_m_cover(h, cover.cover.msets, 2));
  row.note = "tau*=" + to_string(ctx.fractional(h, 2));
  return row;
}

Row check_k5_minus(Context& ctx) {
  Row row{"C([5],3) minus one triple, and minus two triples meeting in a vertex: nu = 2, tau = 4", "", "", ""};
  const auto one = gen_complete_subsets(5, 3, {{1, 2, 3}});
  const auto two = gen_complete_subsets(5, 3, {{1, 2, 3}, {1, 4, 5}});
  row.expected = "minus-one nu=2 tau=4; minus-two nu=2 tau=4";
  row.observed = "minus-one nu=" + std::to_string(nu_int(one, 2, ctx.limits).value) +
                 " tau=" + std::to_string(tau_int(one, 2, ctx.limits).value) +
                 "; minus-two nu=" + std::to_string(nu_int(two, 2, ctx.limits).value) +
                 " tau=" + std::to_string(tau_int(two, 2, ctx.limits).value);
  row.note = "tau* " + to_string(ctx.fractional(one, 2)) + ", " + to_string(ctx.fractional(two, 2));
  return row;
}

Row check_gkk1(Context& ctx) {
  Row row{"C([k+1],k): nu^(k-1) = 1, tau^(k-1) = ceil((k+1)/2), construction matches", "", "", ""};
  for (std::size_t k : {3, 4, 5}) {
    const auto h = gen_complete_subsets(k + 1, k);
    const auto cover = kk1_cover(h, ctx.limits);
    const std::string sep = row.expected.empty() ? "" : "; ";
    row.expected += sep + "k=" + std::to_string(k) + " nu=1 tau=" + std::to_string((k + 2) / 2) +
                    " construction=" + std::to_string((k + 2) / 2) + " valid=true";
    row.observed += sep + "k=" + std::to_string(k) + " nu=" + std::to_string(nu_int(h, k - 1, ctx.limits).value) +
                    " tau=" + std::to_string(tau_int(h, k - 1, ctx.limits).value) +
                    " construction=" + std::to_string(cover.cover.size()) +
                    " valid=" + yes(is_m_cover(h, cover.cover.msets, k - 1));
    ctx.fractional(h, k - 1);
  }
  return row;
}

// Length of the cycle formed by the blocks of H^(2), or 0 if they do not form one.
std::size_t block_cycle_length(const Hypergraph& h) {
  const std::size_t n = h.edge_count();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (intersection_size(h.edge(i), h.edge(j)) >= 2) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
  for (const auto& a : adj)
    if (a.size() != 2) return 0;
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> queue;
  queue.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop();
    for (auto w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        queue.push(w);
      }
  }
  return reached == n ? n : 0;
}

Row check_ex53(Context& ctx) {
  const auto inst = gen_tripartite_7cycle();
  Row row{"tripartite seven-edge instance: nu = 3, tau = 4, derived blocks form a 7-cycle", "", "", ""};
  row.expected = "nu=3 tau=4 cycle=7";
  row.observed = "nu=" + std::to_string(nu_int(inst.graph, 2, ctx.limits).value) +
                 " tau=" + std::to_string(tau_int(inst.graph, 2, ctx.limits).value) +
                 " cycle=" + std::to_string(block_cycle_length(inst.graph));
  row.note = "tau*=" + to_string(ctx.fractional(inst.graph, 2));
  return row;
}

Row check_fano_join(Context& ctx) {
  const auto fano = gen_projective_plane(2).lines;
  const auto joined = join({fano, fano});
  const auto weights = join_fractional_matching(joined, 2, 2);
  const Rat nu_star_value = ctx.fractional(joined, 2);
  Row row{"join of two Fano planes: 49 edges, nu = 1, constant 1/9 is a fractional matching of 49/9", "", "", ""};
  row.expected = "edges=49 uniformity=6 nu=1 constant-total=49/9 constant-feasible=true nu*>=49/9=true";
  row.observed = "edges=" + std::to_string(joined.edge_count()) + " uniformity=" + std::to_string(joined.uniformity()) +
                 " nu=" + std::to_string(nu_int(joined, 2, ctx.limits).value) +
                 " constant-total=" + to_string(weights.total()) +
                 " constant-feasible=" + yes(is_fractional_matching(joined, weights)) +
                 " nu*>=49/9=" + yes(nu_star_value >= make_rat(49, 9));
  row.note = "nu*=" + to_string(nu_star_value);
  return row;
}

Row check_pfactor(Context& ctx) {
  std::size_t agree = 0, total = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    XorShift64Star rng(seed);
    const std::size_t left = rng.between(1, 4), right = rng.between(1, 4);
    const std::size_t edges = rng.between(0, std::min<std::size_t>(12, left * right));
    const auto g = gen_random_bipartite(left, right, edges, seed);
    for (std::size_t p : {1, 2, 3}) {
      ++total;
      agree += p_factor_max(g, p).size() == min_z_value(g, p, ctx.limits).value;
    }
  }
  return {"bipartite p-factors: max p-factor = min over Z of |Z| + p tau(G - Z)", "agree=600/600",
          "agree=" + ratio_count(agree, total), ""};
}

PartiteInstance random_tripartite(XorShift64Star& rng, std::uint64_t seed, std::size_t max_edges) {
  std::vector<std::size_t> sizes;
  std::size_t product = 1;
  for (int i = 0; i < 3; ++i) {
    sizes.push_back(rng.between(1, 3));
    product *= sizes.back();
  }
  const std::size_t edges = rng.between(1, std::min(product, max_edges));
  return gen_random_partite(3, sizes, edges, seed);
}

Row check_assertion52(Context& ctx) {
  std::size_t nu_agree = 0, tau_agree = 0, round_trip = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    XorShift64Star rng(seed * 7919);
    const auto inst = random_tripartite(rng, seed, 12);
    const auto fam = to_family(inst.graph, inst.parts, seed % 3);
    nu_agree += family_nu2(fam, ctx.limits) == nu_int(inst.graph, 2, ctx.limits).value;
    tau_agree += family_tau2(fam, ctx.limits) == tau_int(inst.graph, 2, ctx.limits).value;
    round_trip += from_family(fam) == inst.graph;
  }
  return {"tripartite family model: nu and tau of the families equal those of the hypergraph",
          "nu-agree=100/100 tau-agree=100/100 round-trip=100/100",
          "nu-agree=" + ratio_count(nu_agree, 100) + " tau-agree=" + ratio_count(tau_agree, 100) +
              " round-trip=" + ratio_count(round_trip, 100),
          ""};
}

Hypergraph random_uniform(XorShift64Star& rng, std::uint64_t seed, std::size_t k, std::size_t n_lo, std::size_t n_hi,
                          std::size_t max_edges) {
  const std::size_t n = rng.between(n_lo, n_hi);
  const std::size_t edges = rng.between(1, std::min(combos(n, k), max_edges));
  return gen_random(k, n, edges, seed);
}

Row check_sweep(Context& ctx) {
  constexpr std::size_t kRuns = 300;
  std::size_t haxell = 0, krivelevich = 0, furedi = 0, half = 0, mimic = 0, tunu = 0;
  for (std::uint64_t seed = 1; seed <= kRuns; ++seed) {
    XorShift64Star rng(seed * 104729);
    {
      const auto h = random_uniform(rng, seed, 3, 4, 7, 14);
      const auto tau = tau_int(h, 2, ctx.limits).value;
      const auto nu = nu_int(h, 2, ctx.limits).value;
      haxell += 23 * tau <= 66 * nu;
      krivelevich += Rat(static_cast<long>(tau)) < 2 * ctx.fractional(h, 2);
    }
    {
      const std::size_t k = 3 + seed % 3;
      const auto h = random_uniform(rng, seed, k, k + 1, k + 3, 10);
      const auto nu = nu_int(h, k - 1, ctx.limits).value;
      furedi += ctx.fractional(h, k - 1) <= Rat(static_cast<long>((k - 1) * nu));
    }
    {
      const auto h = random_uniform(rng, seed, 4, 5, 8, 12);
      const auto m = nu_int(h, 2, ctx.limits);
      const auto c = cover45(h, m.cert, ctx.limits);
      half += is_fractional_cover(h, c.cover) && c.cover.total() <= make_rat(9, 2) * static_cast<long>(m.value);
      ctx.fractional(h, 2);
    }
    {
      const auto inst = random_tripartite(rng, seed, 14);
      const auto res = mimic_cover(inst.graph, inst.parts, ctx.limits);
      const auto nu = nu_int(inst.graph, 2, ctx.limits).value;
      const Rat tau_star_value = ctx.fractional(inst.graph, 2);
      mimic += is_fractional_cover(inst.graph, res.cover) && 5 * res.cover.total() <= Rat(static_cast<long>(9 * nu)) &&
               tau_star_value <= res.cover.total();
    }
    {
      const std::size_t bs = rng.between(1, 3), cs = rng.between(1, 3);
      std::vector<std::vector<BcEdge>> fams(2);
      for (auto& fam : fams)
        for (std::uint32_t b = 0; b < bs; ++b)
          for (std::uint32_t c = 0; c < cs; ++c)
            if (rng.below(2)) fam.emplace_back(b, c);
      const auto f = EdgeFamilySeq::make(bs, cs, fams);
      const auto res = tunu_construct(f);
      const auto nu = family_nu2(f, ctx.limits);
      const auto tau = family_tau2(f, ctx.limits);
      tunu += is_family_cover(f, res.cover) && 3 * res.cover.size() <= 5 * nu && tau <= res.cover.size() &&
              3 * tau <= 5 * nu;
    }
  }
  const std::string all = ratio_count(kRuns, kRuns);
  return {"inequality sweep over seeded instances",
          "haxell=" + all + " krivelevich=" + all + " furedi=" + all + " cover45=" + all + " mimic=" + all +
              " tunu=" + all,
          "haxell=" + ratio_count(haxell, kRuns) + " krivelevich=" + ratio_count(krivelevich, kRuns) +
              " furedi=" + ratio_count(furedi, kRuns) + " cover45=" + ratio_count(half, kRuns) +
              " mimic=" + ratio_count(mimic, kRuns) + " tunu=" + ratio_count(tunu, kRuns),
          ""};
}

struct SunflowerCase {
  std::size_t k, m, core;
};

// A sunflower of `petals` edges around core {1..core}, plus random extra
// edges kept only while every pair of edges still meets in >= m vertices.
Hypergraph planted_sunflower(const SunflowerCase& c, std::size_t petals, std::uint64_t seed) {
  std::vector<std::vector<std::string>> edges;
  std::vector<std::string> core;
  for (std::size_t v = 1; v <= c.core; ++v) core.push_back(std::to_string(v));
  std::size_t next = c.core + 1;
  for (std::size_t i = 0; i < petals; ++i) {
    auto e = core;
    while (e.size() < c.k) e.push_back(std::to_string(next++));
    edges.push_back(std::move(e));
  }
  const std::size_t n = next - 1;
  XorShift64Star rng(seed);
  auto meets = [&](const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::size_t common = 0;
    for (const auto& x : a) common += std::find(b.begin(), b.end(), x) != b.end();
    return common;
  };
  for (int attempt = 0; attempt < 40; ++attempt) {
    std::vector<std::string> e;
    while (e.size() < c.k) {
      const auto v = std::to_string(rng.between(1, n));
      if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
    }
    bool fits = true;
    for (const auto& f : edges) fits = fits && meets(e, f) >= c.m && meets(e, f) < c.k;
    if (fits) edges.push_back(std::move(e));
  }
  return Hypergraph::from_tokens(edges, {}, c.k);
}

Row check_sunflower(Context& ctx) {
  const std::vector<SunflowerCase> cases = {{4, 2, 3}, {5, 3, 4}, {5, 2, 3}};
  std::size_t monotone = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto& c = cases[seed % cases.size()];
    const auto h = planted_sunflower(c, c.k + 1 + seed % 3, seed);
    if (nu_int(h, c.m, ctx.limits).value != 1) continue;
    const auto w = sunflower_find(h, ctx.limits);
    if (!w) continue;
    const auto k = sunflower_compress(h, *w, c.m, ctx.limits);
    monotone += k.edge_count() < h.edge_count() && ctx.fractional(k, c.m) >= ctx.fractional(h, c.m);
  }
  return {"sunflower compression keeps nu = 1 instances no smaller in tau*", "monotone=20/20",
          "monotone=" + ratio_count(monotone, 20), ""};
}

Row check_duality(Context& ctx) {
  std::vector<std::pair<Hypergraph, std::size_t>> corpus = {
      {gen_star(6), 2}, {gen_g42_witness(), 2}, {gen_tripartite_7cycle().graph, 2},
      {gen_projective_plane(2).lines, 2}, {gen_complete_subsets(5, 4), 3}};
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    XorShift64Star rng(seed * 31337);
    const std::size_t k = 3 + seed % 2;
    corpus.emplace_back(random_uniform(rng, seed, k, k + 1, k + 4, 14), 1 + seed % k);
  }
  for (auto& [h, m] : corpus) ctx.fractional(h, m);
  const auto& t = ctx.tally;
  return {"tau* = nu* and complementary slackness on every solved instance", "mismatched=0 slackness-failures=0",
          "mismatched=" + std::to_string(t.mismatched) + " slackness-failures=" + std::to_string(t.slack_failures),
          "pairs=" + std::to_string(t.pairs)};
}

using CheckFn = Row (*)(Context&);

const std::vector<std::pair<std::string, CheckFn>>& checks() {
  static const std::vector<std::pair<std::string, CheckFn>> all = {
      {"example1", check_example1},   {"g42", check_g42},       {"k5-minus", check_k5_minus},
      {"gkk1", check_gkk1},           {"ex53", check_ex53},     {"fano-join", check_fano_join},
      {"pfactor", check_pfactor},     {"assertion52", check_assertion52}, {"sweep", check_sweep},
      {"sunflower", check_sunflower}, {"duality", check_duality}};
  return all;
}

}  // namespace

std::size_t VerifyReport::passed() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.pass; }));
}

std::size_t VerifyReport::failed() const { return rows.size() - passed(); }

const std::vector<std::string>& verify_check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : checks()) out.push_back(id);
    return out;
  }();
  return ids;
}

VerifyReport verify_suite(const VerifyOptions& options) {
  const auto& ids = verify_check_ids();
  auto known = [&](const std::string& id) { return std::find(ids.begin(), ids.end(), id) != ids.end(); };
  if (options.only && !known(*options.only)) fail(ErrorKind::ParameterError, "unknown check id '" + *options.only + "'");
  for (const auto& [id, value] : options.overrides)
    if (!known(id)) fail(ErrorKind::ParameterError, "unknown check id '" + id + "' in override");

  Context ctx{options.limits, {}};
  VerifyReport report;
  for (const auto& [id, fn] : checks()) {
    if (options.only && *options.only != id) continue;
    VerifyRow row;
    row.id = id;
    try {
      Row r = fn(ctx);
      row.claim = std::move(r.claim);
      row.expected = std::move(r.expected);
      row.observed = std::move(r.observed);
      row.note = std::move(r.note);
    } catch (const Error& e) {
      row.observed = "error " + std::string(to_string(e.kind())) + ": " + e.what();
    }
    if (auto it = options.overrides.find(id); it != options.overrides.end()) row.expected = it->second;
    row.pass = !row.expected.empty() && row.expected == row.observed;
    report.rows.push_back(std::move(row));
  }
  return report;
}

void write_report(std::ostream& out, const VerifyReport& report) {
  for (const auto& row : report.rows) {
    out << (row.pass ? "PASS " : "FAIL ") << row.id << ": " << row.claim << "\n";
    out << "  expected: " << row.expected << "\n";
    out << "  observed: " << row.observed << "\n";
    if (!row.note.empty()) out << "  note:     " << row.note << "\n";
  }
  out << report.passed() << " passed, " << report.failed() << " failed\n";
}

}  // namespace mcover
