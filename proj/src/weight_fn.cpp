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

#include "mcover/weight_fn.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "mcover/error.hpp"

namespace mcover {

Rat make_rat(long num, long den) {
  if (den == 0) fail(ErrorKind::ParameterError, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

std::string to_pq_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_rat(std::string_view text) {
  std::string s(text);
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    return i < t.size() && std::all_of(t.begin() + static_cast<long>(i), t.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    fail(ErrorKind::ParseError, "bad rational '" + s + "'");
  BigInt d(den);
  if (d == 0) fail(ErrorKind::ParseError, "zero denominator in '" + s + "'");
  Rat r(BigInt(num), d);
  r.canonicalize();
  return r;
}

BigInt floor(const Rat& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

BigInt ceil(const Rat& r) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rat WeightFn::total() const {
  Rat sum = 0;
  for (const auto& [key, w] : weights_) sum += w;
  return sum;
}

Rat WeightFn::at(const VertexSet& key) const {
  auto it = weights_.find(key);
  return it == weights_.end() ? Rat(0) : it->second;
}

void WeightFn::add(const VertexSet& key, const Rat& w) {
  if (w < 0) fail(ErrorKind::ParameterError, "negative weight");
  if (w == 0) return;
  weights_[key] += w;
}

void WeightFn::set(const VertexSet& key, const Rat& w) {
  if (w < 0) fail(ErrorKind::ParameterError, "negative weight");
  if (w == 0) {
    weights_.erase(key);
  } else {
    weights_[key] = w;
  }
}

Rat block_sum(const WeightFn& cover, const VertexSet& edge) {
  Rat sum = 0;
  for (const auto& [key, w] : cover.support())
    if (is_subset(key, edge)) sum += w;
  return sum;
}

Rat incidence_sum(const WeightFn& matching, const VertexSet& mset) {
  Rat sum = 0;
  for (const auto& [key, w] : matching.support())
    if (is_subset(mset, key)) sum += w;
  return sum;
}

bool is_fractional_cover(const Hypergraph& h, const WeightFn& w) {
  if (w.kind() != WeightKind::Cover) return false;
  for (const auto& [key, weight] : w.support())
    if (key.size() != w.order() || weight < 0) return false;
  return std::all_of(h.edges().begin(), h.edges().end(), [&](const VertexSet& e) { return block_sum(w, e) >= 1; });
}

bool is_fractional_matching(const Hypergraph& h, const WeightFn& w) {
  if (w.kind() != WeightKind::Matching) return false;
  std::map<VertexSet, Rat> load;
  for (const auto& [key, weight] : w.support()) {
    if (weight < 0 || !h.has_edge(key)) return false;
    for (auto& s : subsets_of_size(key, w.order())) load[std::move(s)] += weight;
  }
  return std::all_of(load.begin(), load.end(), [](const auto& kv) { return kv.second <= 1; });
}

void write_weight_fn(std::ostream& out, const Hypergraph& h, const WeightFn& w) {
  for (const auto& [key, weight] : w.support()) out << h.format_set(key, ',') << ' ' << to_pq_string(weight) << '\n';
}

WeightFn read_weight_fn(std::istream& in, const Hypergraph& h, WeightKind kind, std::size_t order) {
  WeightFn w(kind, order);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string key, value, extra;
    if (!(fields >> key)) continue;
    if (!(fields >> value) || (fields >> extra)) fail(ErrorKind::ParseError, "expected '<tokens> <p>/<q>'");
    std::vector<std::string> tokens;
    std::istringstream parts(key);
    for (std::string t; std::getline(parts, t, ',');) tokens.push_back(t);
    w.add(h.to_set(tokens), parse_rat(value));
  }
  return w;
}

}  // namespace mcover
