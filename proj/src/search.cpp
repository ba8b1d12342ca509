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

#include "mcover/search.hpp"

#include <algorithm>
#include <cstdio>

#include "mcover/error.hpp"
#include "mcover/integral.hpp"
#include "mcover/prng.hpp"
#include "mcover/text_format.hpp"

namespace mcover {

namespace {

constexpr std::size_t kExhaustivePool = 16;

class Searcher {
 public:
  Searcher(const SearchOptions& options, const std::function<void(const SearchRecord&)>& emit)
      : opt_(options), emit_(emit), bound_(conjectured_ratio_bound(options.k, options.m)) {
    if (opt_.k < 1 || opt_.m < 1 || opt_.m > opt_.k) fail(ErrorKind::OrderOutOfRange, "search needs 1 <= m <= k");
    if (opt_.n < opt_.k) fail(ErrorKind::ParameterError, "search needs n >= k");
    VertexSet all(opt_.n);
    for (std::size_t v = 0; v < opt_.n; ++v) all[v] = static_cast<Vertex>(v);
    for (const auto& s : subsets_of_size(all, opt_.k)) {
      std::vector<std::string> tokens;
      for (Vertex v : s) tokens.push_back(std::to_string(v + 1));
      pool_.push_back(std::move(tokens));
    }
  }

  std::vector<SearchRecord> exhaustive() {
    if (pool_.size() > kExhaustivePool)
      fail(ErrorKind::SizeLimitExceeded, "exhaustive search needs C(n,k) <= " + std::to_string(kExhaustivePool));
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << pool_.size()); ++mask) {
      std::vector<std::size_t> chosen;
      for (std::size_t j = 0; j < pool_.size(); ++j)
        if (mask >> j & 1) chosen.push_back(j);
      consider(chosen, static_cast<std::size_t>(mask), "mask=" + std::to_string(mask));
    }
    return std::move(records_);
  }

  std::vector<SearchRecord> climb() {
    XorShift64Star rng(opt_.seed);
    const std::size_t restart = std::max<std::size_t>(50, opt_.iterations / 10);
    const std::size_t max_edges = std::min(pool_.size(), 2 * opt_.n);
    auto fresh = [&] {
      std::vector<std::size_t> order(pool_.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      const std::size_t count = rng.between(1, max_edges);
      for (std::size_t i = 0; i < count; ++i) std::swap(order[i], order[i + rng.below(order.size() - i)]);
      std::vector<std::size_t> s(order.begin(), order.begin() + static_cast<long>(count));
      std::sort(s.begin(), s.end());
      return s;
    };

    std::vector<std::size_t> current = fresh();
    Rat current_ratio = consider(current, 0, "start");
    for (std::size_t it = 1; it <= opt_.iterations; ++it) {
      if (it % restart == 0) {
        current = fresh();
        current_ratio = consider(current, it, "restart");
        continue;
      }
      std::vector<std::size_t> next = current;
      std::vector<std::size_t> absent;
      for (std::size_t j = 0; j < pool_.size(); ++j)
        if (!std::binary_search(current.begin(), current.end(), j)) absent.push_back(j);
      const auto move = rng.below(3);
      if (move == 0 && !absent.empty() && next.size() > 0) {
        next[rng.below(next.size())] = absent[rng.below(absent.size())];
      } else if (move == 1 && !absent.empty()) {
        next.push_back(absent[rng.below(absent.size())]);
      } else if (next.size() > 1) {
        next.erase(next.begin() + static_cast<long>(rng.below(next.size())));
      } else {
        continue;
      }
      std::sort(next.begin(), next.end());
      const Rat ratio = consider(next, it, "move");
      if (ratio >= current_ratio) {
        current = std::move(next);
        current_ratio = ratio;
      }
    }
    return std::move(records_);
  }

 private:
  Rat consider(const std::vector<std::size_t>& chosen, std::size_t iteration, const std::string& how) {
    std::vector<std::vector<std::string>> edges;
    for (std::size_t j : chosen) edges.push_back(pool_[j]);
    Hypergraph h = Hypergraph::from_tokens(edges, {}, opt_.k);
    const std::size_t tau = tau_int(h, opt_.m, opt_.limits).value;
    const std::size_t nu = nu_int(h, opt_.m, opt_.limits).value;
    Rat ratio(static_cast<long>(tau), static_cast<long>(nu));
    ratio.canonicalize();
    if (!best_ || ratio > *best_) {
      best_ = ratio;
      SearchRecord r;
      r.spec = "search k=" + std::to_string(opt_.k) + " m=" + std::to_string(opt_.m) + " n=" + std::to_string(opt_.n) +
               (opt_.exhaustive ? " exhaustive" : " seed=" + std::to_string(opt_.seed)) + " " + how;
      r.hash = instance_hash(h);
      r.tau = tau;
      r.nu = nu;
      r.ratio = ratio;
      r.iteration = iteration;
      r.flagged = bound_ && ratio > *bound_;
      r.instance = std::move(h);
      if (emit_) emit_(r);
      records_.push_back(std::move(r));
    }
    return ratio;
  }

  const SearchOptions& opt_;
  const std::function<void(const SearchRecord&)>& emit_;
  std::optional<Rat> bound_;
  std::vector<std::vector<std::string>> pool_;
  std::optional<Rat> best_;
  std::vector<SearchRecord> records_;
};

}  // namespace

std::optional<Rat> conjectured_ratio_bound(std::size_t k, std::size_t m) {
  if (k == 3 && m == 2) return Rat(2);
  if (k >= 2 && m == k - 1) return Rat(static_cast<long>((k + 2) / 2));
  return std::nullopt;
}

std::uint64_t instance_hash(const Hypergraph& h) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : instance_to_string(h)) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::vector<SearchRecord> run_search(const SearchOptions& options, const std::function<void(const SearchRecord&)>& emit) {
  Searcher s(options, emit);
  return options.exhaustive ? s.exhaustive() : s.climb();
}

std::string format_record(const SearchRecord& r) {
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(r.hash));
  std::string edges;
  for (std::size_t i = 0; i < r.instance.edge_count(); ++i) {
    if (i) edges += ';';
    edges += r.instance.format_set(r.instance.edge(i));
  }
  return "iter=" + std::to_string(r.iteration) + " tau=" + std::to_string(r.tau) + " nu=" + std::to_string(r.nu) +
         " ratio=" + to_string(r.ratio) + " hash=" + hex + (r.flagged ? " FLAGGED" : "") + " spec=\"" + r.spec +
         "\" edges=" + edges;
}

}  // namespace mcover
