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

#ifndef PTQA_HARNESS_DOT_EXPORT_HPP_
#define PTQA_HARNESS_DOT_EXPORT_HPP_

#include <string>

#include "ptqa/kb/semantic_network.hpp"
#include "ptqa/pattern/configuration.hpp"

namespace ptqa {

// Graphviz digraph of a configuration. Grounded generators are filled
// white, cues filled red; edges carry "relation (phi)" and negative
// assertions are dashed. Node order follows generator order.
std::string ExportDot(const Configuration& config, const SemanticNetwork& network,
                      const std::string& graph_name = "interpretation");

}  // namespace ptqa

#endif  // PTQA_HARNESS_DOT_EXPORT_HPP_
