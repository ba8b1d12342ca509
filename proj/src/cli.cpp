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

#include "mcover/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>

#include "mcover/covers.hpp"
#include "mcover/derived.hpp"
#include "mcover/error.hpp"
#include "mcover/families.hpp"
#include "mcover/family_model.hpp"
#include "mcover/fractional.hpp"
#include "mcover/fractional_covers.hpp"
#include "mcover/integral.hpp"
#include "mcover/mimic.hpp"
#include "mcover/search.hpp"
#include "mcover/sunflower.hpp"
#include "mcover/text_format.hpp"
#include "mcover/verify.hpp"

namespace mcover {

namespace {

struct Io {
  std::istream& in;
  std::ostream& out;
  std::string in_path, out_path;
  std::unique_ptr<std::ifstream> file_in;
  std::unique_ptr<std::ofstream> file_out;

  std::istream& input() {
    if (in_path.empty() || in_path == "-") return in;
    file_in = std::make_unique<std::ifstream>(in_path);
    if (!*file_in) fail(ErrorKind::ParameterError, "cannot open '" + in_path + "'");
    return *file_in;
  }

  std::ostream& output() {
    if (out_path.empty() || out_path == "-") return out;
    if (!file_out) {
      file_out = std::make_unique<std::ofstream>(out_path);
      if (!*file_out) fail(ErrorKind::ParameterError, "cannot write '" + out_path + "'");
    }
    return *file_out;
  }
};

void print_sets(std::ostream& out, const Hypergraph& h, const std::vector<VertexSet>& sets) {
  for (const auto& s : sets) out << h.format_set(s) << "\n";
}

std::string order_tag(std::size_t m) { return "^(" + std::to_string(m) + ")"; }

struct Options {
  std::size_t m = 2;
  std::string what = "tau";
  bool trace = false;
  std::size_t a_class = 0;
  // gen
  std::string family;
  std::map<std::string, std::int64_t> params;
  std::vector<std::string> raw_params;
  std::string sizes;
  std::optional<std::uint64_t> seed;
  // construct
  std::string construction;
  // verify
  std::string suite = "paper";
  std::optional<std::string> only;
  std::vector<std::string> overrides;
  // search
  SearchOptions search;
  std::optional<std::size_t> limit_nonzeros;
};

int run_gen(Options& o, Io& io) {
  GenSpec spec{o.family, o.params, o.seed};
  for (const auto& kv : o.raw_params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) fail(ErrorKind::ParameterError, "--param expects key=value, got '" + kv + "'");
    try {
      spec.params[kv.substr(0, eq)] = std::stoll(kv.substr(eq + 1));
    } catch (const std::exception&) {
      fail(ErrorKind::ParameterError, "--param value is not an integer in '" + kv + "'");
    }
  }
  if (!o.sizes.empty()) {
    std::stringstream ss(o.sizes);
    std::string item;
    int i = 1;
    for (; std::getline(ss, item, ','); ++i) {
      try {
        spec.params["s" + std::to_string(i)] = std::stoll(item);
      } catch (const std::exception&) {
        fail(ErrorKind::ParameterError, "--sizes expects comma-separated integers");
      }
    }
    // The class count follows from the sizes unless given explicitly.
    spec.params.try_emplace("k", i - 1);
  }
  const Instance inst = generate(spec);
  write_instance(io.output(), inst.graph, inst.parts, {"gen " + spec.describe()}, inst.class_names);
  return 0;
}

int run_derive(Options& o, Io& io, const Limits& limits) {
  const Instance inst = parse_instance(io.input());
  const auto d = derive(inst.graph, o.m, limits);
  auto& out = io.output();
  out << "# H" << order_tag(o.m) << ": " << d.ground.size() << " ground sets, " << d.blocks.size() << " blocks\n";
  for (const auto& block : d.blocks) {
    for (std::size_t j = 0; j < block.size(); ++j) out << (j ? " " : "") << inst.graph.format_set(d.ground[block[j]]);
    out << "\n";
  }
  return 0;
}

int run_solve(Options& o, Io& io, const Limits& limits) {
  const Instance inst = parse_instance(io.input());
  const Hypergraph& h = inst.graph;
  auto& out = io.output();
  if (o.what == "tau") {
    const auto r = tau_int(h, o.m, limits);
    out << "tau" << order_tag(o.m) << " = " << r.value << "\n";
    print_sets(out, h, r.cert.msets);
    if (o.trace) {
      out << "# nodes " << r.stats.nodes << "\n# incumbents";
      for (auto b : r.stats.bound_trace) out << ' ' << b;
      out << "\n";
    }
  } else if (o.what == "nu") {
    const auto r = nu_int(h, o.m, limits);
    out << "nu" << order_tag(o.m) << " = " << r.value << "\n";
    print_sets(out, h, r.cert.edges);
    if (o.trace) out << "# nodes " << r.stats.nodes << "\n";
  } else if (o.what == "tau-star") {
    const auto r = tau_star(h, o.m, limits);
    out << "tau*" << order_tag(o.m) << " = " << to_string(r.value) << "\n";
    write_weight_fn(out, h, r.cover);
    if (o.trace) {
      out << "# dual\n";
      write_weight_fn(out, h, r.dual);
    }
  } else if (o.what == "nu-star") {
    const auto r = nu_star(h, o.m, limits);
    out << "nu*" << order_tag(o.m) << " = " << to_string(r.value) << "\n";
    write_weight_fn(out, h, r.matching);
    if (o.trace) {
      out << "# dual\n";
      write_weight_fn(out, h, r.dual);
    }
  } else {
    fail(ErrorKind::ParameterError, "--what must be tau, nu, tau-star or nu-star");
  }
  return 0;
}

const PartiteStructure& need_parts(const Instance& inst) {
  if (!inst.parts) fail(ErrorKind::StructureError, "instance has no @class headers");
  return *inst.parts;
}

int run_construct(Options& o, Io& io, const Limits& limits) {
  const Instance inst = parse_instance(io.input());
  const Hypergraph& h = inst.graph;
  auto& out = io.output();
  const std::string& c = o.construction;
  auto emit_trace = [&](const std::string& text) {
    if (!o.trace) return;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) out << "# " << line << "\n";
  };
  if (c == "two-edge") {
    const auto r = two_edge_cover(h, limits);
    out << "2-cover size " << r.cover.size() << " bound " << r.bound << "\n";
    print_sets(out, h, r.cover.msets);
    emit_trace(r.trace(h));
  } else if (c == "gstar") {
    const auto r = gstar_upper_cover(h, limits);
    out << "fractional 2-cover total " << to_string(r.cover.total()) << " bound " << to_string(r.bound) << "\n";
    write_weight_fn(out, h, r.cover);
    emit_trace(r.trace(h));
  } else if (c == "g42") {
    const auto r = g42_cover(h, limits);
    out << "2-cover size " << r.cover.size() << "\n";
    print_sets(out, h, r.cover.msets);
    emit_trace(r.trace(h));
  } else if (c == "kk1") {
    const auto r = kk1_cover(h, limits);
    out << h.uniformity() - 1 << "-cover size " << r.cover.size() << "\n";
    print_sets(out, h, r.cover.msets);
    emit_trace(r.trace(h));
  } else if (c == "cover45") {
    const auto r = cover45(h, nu_int(h, 2, limits).cert, limits);
    out << "fractional 2-cover total " << to_string(r.cover.total()) << "\n";
    write_weight_fn(out, h, r.cover);
    emit_trace(r.trace(h));
  } else if (c == "crossing") {
    const auto r = lp_support_step(h, limits);
    out << "tau*" << order_tag(2) << " = " << to_string(r.tau_star) << " |U| = " << r.support.size() << "\n";
    if (r.heavy) {
      out << "heavy pair " << h.format_set(*r.heavy) << " (weight >= 1/4); partition step not applicable\n";
    } else if (r.crossing) {
      out << "2-cover size " << r.crossing->cover.size() << "\n";
      print_sets(out, h, r.crossing->cover.msets);
      emit_trace(r.crossing->trace(h));
    }
  } else if (c == "sunflower") {
    const auto w = sunflower_find(h, limits);
    if (!w) {
      out << "# no sunflower with k+1 petals\n";
      return 0;
    }
    std::vector<std::string> header = {"sunflower core " + h.format_set(w->core) + " petals " +
                                       std::to_string(w->petals.size())};
    write_instance(out, sunflower_compress(h, *w, o.m, limits), std::nullopt, header);
  } else if (c == "mimic") {
    const auto r = mimic_cover(h, need_parts(inst), limits);
    out << (r.integral ? "" : "fractional ") << h.uniformity() - 1 << "-cover total " << to_string(r.cover.total())
        << " bound " << to_string(r.bound) << "\n";
    write_weight_fn(out, h, r.cover);
    emit_trace(r.analysis.trace(h) + "g1 " + to_string(r.g1_total) + "\ng2 " + to_string(r.g2_total) + "\n");
  } else if (c == "tunu" || c == "family") {
    const auto f = to_family(h, need_parts(inst), o.a_class);
    if (c == "family") {
      out << "families " << f.size() << "\nnu2 " << family_nu2(f, limits) << "\ntau2 " << family_tau2(f, limits) << "\n";
      return 0;
    }
    const auto r = tunu_construct(f);
    out << "family cover size " << r.cover.size() << "\nZ";
    for (auto [b, cc] : r.cover.z) out << ' ' << f.b_labels[b] << ',' << f.c_labels[cc];
    out << "\n";
    for (std::size_t i = 0; i < r.cover.vertex_covers.size(); ++i) {
      out << "T" << i + 1;
      for (const auto& v : r.cover.vertex_covers[i]) out << ' ' << v;
      out << "\n";
    }
    emit_trace(r.trace.trace(f));
  } else {
    fail(ErrorKind::ParameterError, "unknown construction '" + c + "'");
  }
  return 0;
}

int run_verify(Options& o, Io& io, const Limits& limits) {
  if (o.suite != "paper") fail(ErrorKind::ParameterError, "unknown suite '" + o.suite + "'");
  VerifyOptions vo;
  vo.only = o.only;
  vo.limits = limits;
  for (const auto& kv : o.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) fail(ErrorKind::ParameterError, "--override expects id=value");
    vo.overrides[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  const auto report = verify_suite(vo);
  write_report(io.output(), report);
  return report.failed() == 0 ? 0 : 1;
}

int run_search_cmd(Options& o, Io& io, const Limits& limits) {
  o.search.limits = limits;
  auto& out = io.output();
  bool flagged = false;
  run_search(o.search, [&](const SearchRecord& r) {
    out << format_record(r) << "\n";
    flagged = flagged || r.flagged;
  });
  if (flagged) out << "# record above the conjectured ratio; check it independently\n";
  return flagged ? 1 : 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact m-cover / m-matching toolkit for uniform hypergraphs"};
  app.require_subcommand(1);
  Options o;
  Io io{in, out, {}, {}, {}, {}};
  app.add_option("--limit-nonzeros", o.limit_nonzeros, "LP size guard (nonzeros)");

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--in", io.in_path, "input file (default stdin)");
    sub->add_option("--out", io.out_path, "output file (default stdout)");
  };

  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("family", o.family, "star|complete|plane|fano-minus-line|join-planes|g42|tripartite7|random|partite")
      ->required();
  for (const char* name : {"n", "k", "q", "parts", "edges", "size"}) {
    gen->add_option_function<std::int64_t>(std::string("--") + name,
                                           [&o, name](std::int64_t v) { o.params[name] = v; });
  }
  gen->add_option("--sizes", o.sizes, "comma-separated class sizes for partite");
  gen->add_option("--param", o.raw_params, "extra key=value parameter");
  gen->add_option("--seed", o.seed);
  add_io(gen);

  auto* der = app.add_subcommand("derive", "print the blocks of H^(m)");
  der->add_option("-m", o.m)->required();
  add_io(der);

  auto* solve = app.add_subcommand("solve", "exact tau, nu, tau*, nu*");
  solve->add_option("--what", o.what)->check(CLI::IsMember({"tau", "nu", "tau-star", "nu-star"}));
  solve->add_option("-m", o.m);
  solve->add_flag("--trace", o.trace);
  add_io(solve);

  auto* cons = app.add_subcommand("construct", "run a constructive cover procedure");
  cons->add_option("name", o.construction,
                   "two-edge|gstar|g42|kk1|cover45|crossing|sunflower|mimic|tunu|family")
      ->required();
  cons->add_option("-m", o.m, "order for sunflower compression");
  cons->add_option("--class", o.a_class, "singled-out class index for tunu/family");
  cons->add_flag("--trace", o.trace);
  add_io(cons);

  auto* ver = app.add_subcommand("verify", "run the reproduction suite");
  ver->add_option("--suite", o.suite);
  ver->add_option("--only", o.only);
  ver->add_option("--override", o.overrides, "id=expected, replaces a golden value");
  add_io(ver);

  auto* sea = app.add_subcommand("search", "look for high tau/nu ratios");
  sea->add_option("-k", o.search.k);
  sea->add_option("-m", o.search.m);
  sea->add_option("-n", o.search.n);
  sea->add_option("--iters", o.search.iterations);
  sea->add_option("--seed", o.search.seed);
  sea->add_flag("--exhaustive", o.search.exhaustive);
  add_io(sea);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Limits limits = Limits::from_env();
    if (o.limit_nonzeros) limits.lp_nonzeros = *o.limit_nonzeros;
    if (*gen) return run_gen(o, io);
    if (*der) return run_derive(o, io, limits);
    if (*solve) return run_solve(o, io, limits);
    if (*cons) return run_construct(o, io, limits);
    if (*ver) return run_verify(o, io, limits);
    return run_search_cmd(o, io, limits);
  } catch (const Error& e) {
    err << "mcover: " << e.what() << "\n";
    const bool finding = e.kind() == ErrorKind::AssertionFailure || e.kind() == ErrorKind::InternalContradiction;
    return finding ? 1 : 2;
  }
}

}  // namespace mcover
