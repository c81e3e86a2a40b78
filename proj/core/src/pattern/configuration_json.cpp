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

#include "ptqa/pattern/configuration_json.hpp"

#include <string>

#include "ptqa/errors.hpp"

namespace ptqa {

std::string_view ToString(Grounding grounding) {
  return grounding == Grounding::kGrounded ? "grounded" : "ungrounded";
}

std::string_view ToString(Level level) {
  switch (level) {
    case Level::kEvidence:
      return "evidence";
    case Level::kHypothesis:
      return "hypothesis";
    case Level::kCue:
      return "cue";
  }
  return "unknown";
}

nlohmann::json ConfigurationToJson(const Configuration& config,
                                   const SemanticNetwork& network) {
  nlohmann::json generators = nlohmann::json::array();
  for (const Generator& g : config.generators()) {
    generators.push_back({{"concept", network.Uri(g.node)},
                          {"grounding", ToString(g.grounding)},
                          {"level", ToString(g.level)}});
  }
  nlohmann::json bonds = nlohmann::json::array();
  for (const Bond& b : config.bonds()) {
    bonds.push_back({{"from", b.from},
                     {"to", b.to},
                     {"relation", network.RelationName(b.relation)},
                     {"phi", b.phi},
                     {"energy", b.energy}});
  }
  const EnergySplit e = ConfigEnergy(config);
  return {{"generators", std::move(generators)},
          {"bonds", std::move(bonds)},
          {"energy",
           {{"total", e.total}, {"grounded", e.grounded}, {"ungrounded", e.ungrounded}}}};
}

Configuration ConfigurationFromJson(const nlohmann::json& doc,
                                    const SemanticNetwork& network) {
  try {
    Configuration config;
    for (const auto& g : doc.at("generators")) {
      const auto uri = g.at("concept").get<std::string>();
      const auto id = network.FindUri(uri);
      if (!id) throw DataError("unknown concept in configuration: " + uri);
      const auto level = g.at("level").get<std::string>();
      Level lv;
      if (level == "evidence") {
        lv = Level::kEvidence;
      } else if (level == "hypothesis") {
        lv = Level::kHypothesis;
      } else if (level == "cue") {
        lv = Level::kCue;
      } else {
        throw DataError("unknown generator level: " + level);
      }
      config.AddGenerator(*id, lv);
    }
    for (const auto& b : doc.at("bonds")) {
      const auto name = b.at("relation").get<std::string>();
      const auto rel = network.FindRelation(name);
      if (!rel) throw DataError("unknown relation in configuration: " + name);
      config.AddBond(b.at("from").get<std::size_t>(), b.at("to").get<std::size_t>(),
                     *rel, b.at("phi").get<double>());
    }
    return config;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed configuration document: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw DataError(std::string("malformed configuration document: ") + e.what());
  }
}

}  // namespace ptqa
