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

#ifndef PTQA_PATTERN_CONFIGURATION_JSON_HPP_
#define PTQA_PATTERN_CONFIGURATION_JSON_HPP_

#include <string_view>

#include <nlohmann/json.hpp>

#include "ptqa/kb/semantic_network.hpp"
#include "ptqa/pattern/configuration.hpp"

namespace ptqa {

std::string_view ToString(Grounding grounding);
std::string_view ToString(Level level);

// {"generators": [{"concept", "grounding", "level"}...],
//  "bonds": [{"from", "to", "relation", "phi", "energy"}...],
//  "energy": {"total", "grounded", "ungrounded"}}
// Concepts and relations are written by name.
nlohmann::json ConfigurationToJson(const Configuration& config,
                                   const SemanticNetwork& network);

// Inverse of ConfigurationToJson; names are resolved against `network`.
// Throws DataError on unknown names or malformed documents.
Configuration ConfigurationFromJson(const nlohmann::json& doc,
                                    const SemanticNetwork& network);

}  // namespace ptqa

#endif  // PTQA_PATTERN_CONFIGURATION_JSON_HPP_
