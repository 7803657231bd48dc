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

#pragma once

#include <string>

#include <json.hpp>

#include "zxsim/diagram.hpp"

namespace zxsim {

/// Schema "zxsim.diagram/1"; see docs/diagram_json.md.
nlohmann::json diagram_to_json(const Diagram& d);
/// Throws ConstructionError on malformed input.
Diagram diagram_from_json(const nlohmann::json& j);

std::string vertex_kind_name(VertexKind k);
VertexKind vertex_kind_from_name(const std::string& s);

}  // namespace zxsim
