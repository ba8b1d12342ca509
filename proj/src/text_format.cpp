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

#include "mcover/text_format.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "mcover/error.hpp"

namespace mcover {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

}  // namespace

Instance parse_instance(std::istream& in) {
  std::vector<std::vector<std::string>> edges;
  std::vector<std::pair<std::string, std::vector<std::string>>> classes;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '@') {
      auto colon = line.find(':', first);
      auto head = split_ws(line.substr(first, colon == std::string::npos ? std::string::npos : colon - first));
      if (colon == std::string::npos || head.size() != 2 || head[0] != "@class")
        fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected '@class <name>: tokens'");
      classes.emplace_back(head[1], split_ws(line.substr(colon + 1)));
      continue;
    }
    auto tokens = split_ws(line);
    if (!edges.empty() && tokens.size() != edges.front().size())
      fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": edge of size " +
                                      std::to_string(tokens.size()) + " in a " +
                                      std::to_string(edges.front().size()) + "-uniform hypergraph");
    edges.push_back(std::move(tokens));
  }
  if (edges.empty()) fail(ErrorKind::ParseError, "no edges in input");

  std::vector<std::string> extra;
  for (const auto& [name, toks] : classes) extra.insert(extra.end(), toks.begin(), toks.end());
  Instance inst{Hypergraph::from_tokens(edges, extra), std::nullopt, {}};
  if (!classes.empty()) {
    PartiteStructure parts;
    for (const auto& [name, toks] : classes) {
      VertexSet s = inst.graph.to_set(toks);
      parts.classes.push_back(std::move(s));
      inst.class_names.push_back(name);
    }
    try {
      parts.validate(inst.graph);
    } catch (const Error& e) {
      fail(ErrorKind::ParseError, e.what());
    }
    inst.parts = std::move(parts);
  }
  return inst;
}

Instance parse_instance_string(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

void write_instance(std::ostream& out, const Hypergraph& h, const std::optional<PartiteStructure>& parts,
                    const std::vector<std::string>& header, const std::vector<std::string>& class_names) {
  for (const auto& line : header) out << "# " << line << '\n';
  if (parts) {
    for (std::size_t c = 0; c < parts->classes.size(); ++c) {
      std::string name = c < class_names.size() ? class_names[c] : "V" + std::to_string(c + 1);
      out << "@class " << name << ":";
      for (Vertex v : parts->classes[c]) out << ' ' << h.token(v);
      out << '\n';
    }
  }
  for (const auto& e : h.edges()) out << h.format_set(e, ' ') << '\n';
}

std::string instance_to_string(const Hypergraph& h, const std::optional<PartiteStructure>& parts,
                               const std::vector<std::string>& header) {
  std::ostringstream out;
  write_instance(out, h, parts, header);
  return out.str();
}

}  // namespace mcover
