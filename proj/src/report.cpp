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

#include "zxsim/report.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

namespace zxsim {

std::string bit_string(const std::vector<int>& bits) {
  std::string s;
  for (int b : bits) s += static_cast<char>('0' + b);
  return s;
}

RunRecord record_sample(const Circuit& c, std::uint64_t seed, const SimConfig& cfg, nlohmann::json spec) {
  const auto start = std::chrono::steady_clock::now();
  const SampleResult s = sample(c, seed, cfg);
  RunRecord r;
  r.spec = std::move(spec);
  r.timed_out = s.timed_out;
  r.bits = s.timed_out ? "" : bit_string(s.bits);
  r.value = s.probability;
  r.report = s.report;
  r.report.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string spec_field(const nlohmann::json& spec, const char* key) {
  if (!spec.contains(key)) return "";
  const auto& v = spec.at(key);
  return v.is_string() ? v.get<std::string>() : v.dump();
}

std::string float_text(const Scalar& s) {
  const auto z = s.to_complex();
  char buf[64];
  if (s.as_real()) {
    std::snprintf(buf, sizeof buf, "%.17g", z.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  }
  return buf;
}

}  // namespace

std::string render_exact(const Scalar& s) {
  if (const auto r = s.as_real()) return r->to_string();
  return s.to_string();
}

std::string reduction_factor(const BigInt& naive, std::uint64_t leaves) {
  if (leaves == 0) return "";
  constexpr int kDigits = 6;
  BigInt scale = 1;
  for (int i = 0; i < kDigits; ++i) scale *= 10;
  const BigInt q = naive * scale / leaves;
  std::string frac = BigInt(q % scale).str();
  frac.insert(0, static_cast<std::size_t>(kDigits) - frac.size(), '0');
  return BigInt(q / scale).str() + "." + frac;
}

nlohmann::json report_to_json(const DecompositionReport& r, bool timing) {
  nlohmann::json j;
  j["leaf_terms"] = r.leaf_terms;
  j["pruned"] = r.pruned;
  j["max_live_diagrams"] = r.max_live_diagrams;
  j["initial_t"] = r.initial_t;
  j["naive_terms"] = r.naive_terms.str();
  j["reduction_factor"] = reduction_factor(r.naive_terms, r.leaf_terms);
  nlohmann::json hist = nlohmann::json::array();
  for (const auto& level : r.t_histogram) {
    nlohmann::json row = nlohmann::json::object();
    for (const auto& [t, n] : level) row[std::to_string(t)] = n;
    hist.push_back(row);
  }
  j["t_histogram"] = hist;
  if (timing) j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

nlohmann::json to_json(const RunRecord& r, bool timing) {
  nlohmann::json j = report_to_json(r.report, timing);
  j["schema"] = kRunRecordSchema;
  j["spec"] = r.spec;
  j["outcome"] = r.timed_out ? "timeout" : "success";
  if (!r.bits.empty()) j["bits"] = r.bits;
  if (r.value && !r.timed_out) {
    j[r.value_name] = render_exact(*r.value);
    j[r.value_name + "_tuple"] = r.value->to_string();
    j[r.value_name + "_float"] = float_text(*r.value);
  }
  return j;
}

std::vector<std::string> csv_columns() {
  return {"schema",     "family",    "qubits",          "size",       "seed",           "t_count",
          "outcome",    "bits",      "probability",     "leaf_terms", "naive_terms",    "reduction_factor",
          "initial_t",  "max_live_diagrams", "wall_time_ms"};
}

std::string csv_header() {
  std::string s;
  for (const auto& c : csv_columns()) s += (s.empty() ? "" : ",") + c;
  return s + "\n";
}

std::string csv_row(const RunRecord& r, bool timing) {
  const auto& rep = r.report;
  std::vector<std::string> cells = {
      kBenchCsvSchema,
      spec_field(r.spec, "family"),
      spec_field(r.spec, "qubits"),
      spec_field(r.spec, "size"),
      spec_field(r.spec, "seed"),
      spec_field(r.spec, "t_count"),
      r.timed_out ? "timeout" : "success",
      r.bits,
      r.value && !r.timed_out ? render_exact(*r.value) : "",
      std::to_string(rep.leaf_terms),
      rep.naive_terms.str(),
      reduction_factor(rep.naive_terms, rep.leaf_terms),
      std::to_string(rep.initial_t),
      std::to_string(rep.max_live_diagrams),
      timing ? std::to_string(static_cast<long long>(rep.wall_time_ms)) : "",
  };
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + csv_escape(cells[i]);
  return s + "\n";
}

}  // namespace zxsim
