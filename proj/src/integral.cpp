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

#include "mcover/integral.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <numeric>
#include <string>

#include "mcover/error.hpp"
#include "mcover/fractional.hpp"

namespace mcover {

namespace {

class CoverSearch {
 public:
  CoverSearch(const DerivedSystem& d, const Limits& limits, std::size_t lower_bound)
      : d_(d),
        limits_(limits),
        lower_bound_(lower_bound),
        incidence_(d.incidence()),
        hits_(d.blocks.size(), 0),
        excluded_(d.ground.size(), false),
        uncovered_(d.blocks.size()) {}

  CoverResult run() {
    best_ = greedy();
    stats_.bound_trace.push_back(best_.size());
    if (best_.size() > lower_bound_) search();
    CoverResult out;
    out.value = best_.size();
    for (std::size_t g : best_) out.cert.msets.push_back(d_.ground[g]);
    std::sort(out.cert.msets.begin(), out.cert.msets.end());
    out.stats = stats_;
    return out;
  }

 private:
  std::vector<std::size_t> greedy() const {
    std::vector<bool> covered(d_.blocks.size(), false);
    std::vector<std::size_t> picked;
    std::size_t left = d_.blocks.size();
    while (left > 0) {
      std::size_t best_g = 0, best_gain = 0;
      for (std::size_t g = 0; g < d_.ground.size(); ++g) {
        std::size_t gain = 0;
        for (std::size_t b : incidence_[g])
          if (!covered[b]) ++gain;
        if (gain > best_gain) {
          best_gain = gain;
          best_g = g;
        }
      }
      picked.push_back(best_g);
      for (std::size_t b : incidence_[best_g]) {
        if (!covered[b]) {
          covered[b] = true;
          --left;
        }
      }
    }
    return picked;
  }

  void choose(std::size_t g) {
    chosen_.push_back(g);
    for (std::size_t b : incidence_[g])
      if (hits_[b]++ == 0) --uncovered_;
  }

  void unchoose(std::size_t g) {
    chosen_.pop_back();
    for (std::size_t b : incidence_[g])
      if (--hits_[b] == 0) ++uncovered_;
  }

  std::size_t admissible(std::size_t b) const {
    std::size_t n = 0;
    for (std::size_t g : d_.blocks[b])
      if (!excluded_[g]) ++n;
    return n;
  }

  // Uncovered blocks with pairwise disjoint admissible sets each need their
  // own m-set.
  std::size_t packing_bound() {
    mark_.assign(d_.ground.size(), false);
    std::size_t count = 0;
    for (std::size_t b = 0; b < d_.blocks.size(); ++b) {
      if (hits_[b] > 0) continue;
      bool free = true;
      for (std::size_t g : d_.blocks[b]) {
        if (!excluded_[g] && mark_[g]) {
          free = false;
          break;
        }
      }
      if (!free) continue;
      ++count;
      for (std::size_t g : d_.blocks[b])
        if (!excluded_[g]) mark_[g] = true;
    }
    return count;
  }

  void search() {
    if (++stats_.nodes > limits_.search_nodes)
      fail(ErrorKind::SizeLimitExceeded, "branch and bound exceeded " + std::to_string(limits_.search_nodes) + " nodes");
    if (uncovered_ == 0) {
      if (chosen_.size() < best_.size()) {
        best_ = chosen_;
        stats_.bound_trace.push_back(best_.size());
      }
      return;
    }
    if (chosen_.size() + packing_bound() >= best_.size()) return;

    std::size_t branch_block = d_.blocks.size(), fewest = 0;
    for (std::size_t b = 0; b < d_.blocks.size(); ++b) {
      if (hits_[b] > 0) continue;
      std::size_t a = admissible(b);
      if (branch_block == d_.blocks.size() || a < fewest) {
        branch_block = b;
        fewest = a;
      }
    }
    if (fewest == 0) return;

    std::vector<std::pair<std::size_t, std::size_t>> candidates;  // (-gain, g)
    for (std::size_t g : d_.blocks[branch_block]) {
      if (excluded_[g]) continue;
      std::size_t gain = 0;
      for (std::size_t b : incidence_[g])
        if (hits_[b] == 0) ++gain;
      candidates.emplace_back(d_.blocks.size() - gain, g);
    }
    std::sort(candidates.begin(), candidates.end());

    std::vector<std::size_t> newly_excluded;
    for (const auto& [key, g] : candidates) {
      choose(g);
      search();
      unchoose(g);
      if (best_.size() <= lower_bound_) break;
      excluded_[g] = true;
      newly_excluded.push_back(g);
    }
    for (std::size_t g : newly_excluded) excluded_[g] = false;
  }

  const DerivedSystem& d_;
  const Limits& limits_;
  std::size_t lower_bound_;
  std::vector<std::vector<std::size_t>> incidence_;
  std::vector<std::size_t> hits_;
  std::vector<bool> excluded_;
  std::vector<bool> mark_;
  std::size_t uncovered_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
  SearchStats stats_;
};

using Bits = boost::dynamic_bitset<>;

class CliqueSearch {
 public:
  CliqueSearch(std::vector<Bits> adjacency, const Limits& limits)
      : adjacency_(std::move(adjacency)), limits_(limits) {}

  std::vector<std::size_t> run() {
    Bits all(adjacency_.size());
    all.set();
    std::vector<std::size_t> current;
    expand(current, all);
    return best_;
  }

  SearchStats stats() const { return stats_; }

 private:
  void expand(std::vector<std::size_t>& current, Bits candidates) {
    if (++stats_.nodes > limits_.search_nodes)
      fail(ErrorKind::SizeLimitExceeded, "matching search exceeded " + std::to_string(limits_.search_nodes) + " nodes");
    if (candidates.none()) {
      if (current.size() > best_.size()) {
        best_ = current;
        stats_.bound_trace.push_back(best_.size());
      }
      return;
    }
    // Greedy colouring: each colour class is an independent set in the
    // compatibility graph, so a clique takes at most one vertex per class.
    std::vector<std::size_t> order, colour;
    Bits uncoloured = candidates;
    std::size_t c = 0;
    while (uncoloured.any()) {
      ++c;
      Bits available = uncoloured;
      for (auto v = available.find_first(); v != Bits::npos; v = available.find_next(v)) {
        available &= ~adjacency_[v];
        uncoloured.reset(v);
        order.push_back(v);
        colour.push_back(c);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + colour[i] <= best_.size()) return;
      const std::size_t v = order[i];
      current.push_back(v);
      expand(current, candidates & adjacency_[v]);
      current.pop_back();
      candidates.reset(v);
    }
  }

  std::vector<Bits> adjacency_;
  const Limits& limits_;
  std::vector<std::size_t> best_;
  SearchStats stats_;
};

}  // namespace

CoverResult tau_int(const Hypergraph& h, std::size_t m, const Limits& limits) {
  const DerivedSystem d = derive(h, m, limits);
  if (d.blocks.empty()) return {};
  std::size_t lower = 1;
  if (d.nonzeros() <= limits.lp_bound_nonzeros) {
    const LpSolution s = lp_solve(cover_lp(d), limits);
    lower = static_cast<std::size_t>(ceil(s.value).get_ui());
  }
  return CoverSearch(d, limits, lower).run();
}

MatchingResult nu_int(const Hypergraph& h, std::size_t m, const Limits& limits) {
  if (m < 1 || m > h.uniformity())
    fail(ErrorKind::OrderOutOfRange, "order " + std::to_string(m) + " outside 1.." + std::to_string(h.uniformity()));
  const std::size_t n = h.edge_count();
  if (n == 0) return {};
  std::vector<Bits> compatible(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (intersection_size(h.edge(i), h.edge(j)) < m) {
        compatible[i].set(j);
        compatible[j].set(i);
      }
  CliqueSearch search(std::move(compatible), limits);
  auto best = search.run();
  std::sort(best.begin(), best.end());
  MatchingResult out;
  out.value = best.size();
  for (std::size_t i : best) out.cert.edges.push_back(h.edge(i));
  out.stats = search.stats();
  return out;
}

}  // namespace mcover
