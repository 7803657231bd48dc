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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zxsim/decompose.hpp"
#include "zxsim/simulate.hpp"

namespace zxsim {

inline constexpr const char* kRunRecordSchema = "zxsim.runrecord/1";
inline constexpr const char* kBenchCsvSchema = "zxsim.bench/1";

/// Result of one CLI run: a sample, an amplitude or a marginal.
struct RunRecord {
  /// Echo of the inputs (command, circuit, flags).
  nlohmann::json spec = nlohmann::json::object();
  bool timed_out = false;
  /// Sampled outcome, qubit 0 first; empty when not sampling.
  std::string bits;
  /// "probability" or "amplitude".
  std::string value_name = "probability";
  std::optional<Scalar> value;
  DecompositionReport report;
};

/// Real values as (x + y*sqrt2)/2^k, anything else as "(k; a, b, c, d)".
std::string bit_string(const std::vector<int>& bits);

/// Samples `c` once and packages the outcome; wall_time_ms covers the whole call.
RunRecord record_sample(const Circuit& c, std::uint64_t seed, const SimConfig& cfg,
                        nlohmann::json spec = nlohmann::json::object());

std::string render_exact(const Scalar& s);
/// naive / leaves to six decimals, truncated; empty when leaves is 0.
std::string reduction_factor(const BigInt& naive, std::uint64_t leaves);

nlohmann::json report_to_json(const DecompositionReport& r, bool timing);
/// Keys are emitted in sorted order, so equal records serialise identically.
nlohmann::json to_json(const RunRecord& r, bool timing = true);

std::vector<std::string> csv_columns();
std::string csv_header();
std::string csv_row(const RunRecord& r, bool timing = true);

}  // namespace zxsim
