// Copyright 2026 The zxsim Authors
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

#include "zxsim/diagram_json.hpp"

#include "zxsim/errors.hpp"

namespace zxsim {

namespace {
constexpr const char* kSchema = "zxsim.diagram/1";
}

std::string vertex_kind_name(VertexKind k) {
  switch (k) {
    case VertexKind::BoundaryIn: return "in";
    case VertexKind::BoundaryOut: return "out";
    case VertexKind::Z: return "Z";
    case VertexKind::X: return "X";
    case VertexKind::HBox: return "H";
  }
  return "?";
}

VertexKind vertex_kind_from_name(const std::string& s) {
  if (s == "in") return VertexKind::BoundaryIn;
  if (s == "out") return VertexKind::BoundaryOut;
  if (s == "Z") return VertexKind::Z;
  if (s == "X") return VertexKind::X;
  if (s == "H") return VertexKind::HBox;
  throw ConstructionError("unknown vertex kind \"" + s + "\"");
}

nlohmann::json diagram_to_json(const Diagram& d) {
  nlohmann::json j;
  j["schema"] = kSchema;
  auto& vs = j["vertices"] = nlohmann::json::array();
  auto& es = j["edges"] = nlohmann::json::array();
  for (VertexId v : d.vertex_ids()) {
    vs.push_back({{"id", v}, {"kind", vertex_kind_name(d.kind(v))}, {"phase", d.phase(v).m()}});
    for (const Adjacent& a : d.neighbours(v)) {
      if (a.v < v) continue;
      es.push_back({{"u", v}, {"v", a.v}, {"simple", a.edges.simple}, {"hadamard", a.edges.hadamard}});
    }
  }
  j["inputs"] = d.inputs();
  j["outputs"] = d.outputs();
  j["scalar"] = d.scalar().to_string();
  return j;
}

Diagram diagram_from_json(const nlohmann::json& j) {
  try {
    if (j.at("schema").get<std::string>() != kSchema) throw ConstructionError("unsupported diagram schema");
    Diagram d;
    for (const auto& v : j.at("vertices")) {
      d.add_vertex_with_id(v.at("id").get<VertexId>(), vertex_kind_from_name(v.at("kind").get<std::string>()),
                           Phase(v.at("phase").get<int>()));
    }
    for (const auto& e : j.at("edges")) {
      const auto u = e.at("u").get<VertexId>();
      const auto v = e.at("v").get<VertexId>();
      d.add_edge(u, v, EdgeKind::Simple, e.value("simple", 0));
      d.add_edge(u, v, EdgeKind::Hadamard, e.value("hadamard", 0));
    }
    for (VertexId b : j.at("inputs").get<std::vector<VertexId>>()) {
      if (!d.contains(b) || d.kind(b) != VertexKind::BoundaryIn) throw ConstructionError("input is not a boundary");
      d.inputs().push_back(b);
    }
    for (VertexId b : j.at("outputs").get<std::vector<VertexId>>()) {
      if (!d.contains(b) || d.kind(b) != VertexKind::BoundaryOut) throw ConstructionError("output is not a boundary");
      d.outputs().push_back(b);
    }
    d.scalar() = Scalar::parse(j.at("scalar").get<std::string>());
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw ConstructionError(std::string("malformed diagram JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConstructionError(std::string("malformed diagram JSON: ") + e.what());
  }
}

}  // namespace zxsim
