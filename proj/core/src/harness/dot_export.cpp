// Copyright 2026 The ptqa Authors.
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

#include "ptqa/harness/dot_export.hpp"

#include <cstdio>
#include <sstream>

#include "ptqa/pattern/configuration_json.hpp"

namespace ptqa {
namespace {

std::string Quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string Label(const std::string& uri) {
  const auto slash = uri.find('/');
  std::string term = slash == std::string::npos ? uri : uri.substr(slash + 1);
  for (char& c : term) {
    if (c == '_') c = ' ';
  }
  return term;
}

std::string FormatPhi(double phi) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", phi);
  return buf;
}

}  // namespace

std::string ExportDot(const Configuration& config, const SemanticNetwork& network,
                      const std::string& graph_name) {
  std::ostringstream out;
  out << "digraph " << Quote(graph_name) << " {\n";
  out << "  rankdir=TB;\n";
  out << "  node [shape=ellipse, style=filled, fontname=\"Helvetica\"];\n";
  const auto generators = config.generators();
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const Generator& g = generators[i];
    out << "  g" << i << " [label=" << Quote(Label(network.Uri(g.node)))
        << ", fillcolor=" << (g.grounded() ? "white" : "red")
        << ", level=" << Quote(std::string(ToString(g.level))) << "];\n";
  }
  for (const Bond& b : config.bonds()) {
    out << "  g" << b.from << " -> g" << b.to << " [label="
        << Quote(network.RelationName(b.relation) + " (" + FormatPhi(b.phi) + ")");
    if (b.phi < 0.0) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ptqa
