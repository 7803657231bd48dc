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

// zxsim command-line front end: gen, sample, amplitude, marginal, bench.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "zxsim/benchgen.hpp"
#include "zxsim/errors.hpp"
#include "zxsim/report.hpp"
#include "zxsim/simulate.hpp"

namespace {

using namespace zxsim;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitTimeout = 3;
constexpr int kExitInconsistent = 4;

struct RunFlags {
  std::string circuit;
  double timeout_secs = 300;
  std::size_t threads = std::max(1U, std::thread::hardware_concurrency());
  std::size_t depth = 3;
  std::string ccz_mode = "SevenT";
  std::uint64_t seed = 0;
  bool omit_timing = false;
};

void add_run_flags(CLI::App* cmd, RunFlags& f, bool needs_circuit = true) {
  if (needs_circuit) cmd->add_option("circuit", f.circuit, "QASM file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--timeout-secs", f.timeout_secs, "Wall-clock budget per run")->capture_default_str();
  cmd->add_option("--threads", f.threads, "Decomposition workers")->check(CLI::PositiveNumber);
  cmd->add_option("--depth", f.depth, "Breadth-first fan-out depth")->capture_default_str();
  cmd->add_option("--ccz-mode", f.ccz_mode, "CCZ encoding")
      ->check(CLI::IsMember({"SevenT", "FourT"}))
      ->capture_default_str();
  cmd->add_option("--seed", f.seed, "Random seed")->capture_default_str();
  cmd->add_flag("--omit-timing", f.omit_timing, "Leave wall-clock fields out of the output");
}

SimConfig sim_config(const RunFlags& f) {
  SimConfig cfg;
  cfg.ccz_mode = f.ccz_mode == "FourT" ? CczMode::FourT : CczMode::SevenT;
  cfg.decompose.threads = f.threads;
  cfg.decompose.parallel_depth = f.depth;
  cfg.decompose.deadline = std::chrono::steady_clock::now() +
                           std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                               std::chrono::duration<double>(f.timeout_secs));
  return cfg;
}

json spec_echo(const std::string& command, const RunFlags& f, const Circuit& c) {
  json s;
  s["command"] = command;
  s["circuit"] = f.circuit;
  s["qubits"] = c.n_qubits;
  s["t_count"] = t_count(c, f.ccz_mode == "FourT" ? CczMode::FourT : CczMode::SevenT);
  s["seed"] = f.seed;
  s["depth"] = f.depth;
  s["ccz_mode"] = f.ccz_mode;
  s["timeout_secs"] = f.timeout_secs;
  return s;
}

Circuit load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConstructionError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_qasm(ss.str());
  } catch (const ParseError& e) {
    throw ConstructionError(path + ":" + e.what());
  }
}

std::vector<int> parse_bits(const std::string& s, std::size_t n, const char* what) {
  if (s.size() != n) throw ConstructionError(std::string(what) + ": expected " + std::to_string(n) + " bits");
  std::vector<int> bits;
  for (char ch : s) {
    if (ch != '0' && ch != '1') throw ConstructionError(std::string(what) + ": bits must be 0 or 1");
    bits.push_back(ch - '0');
  }
  return bits;
}

int emit(const RunRecord& r, bool omit_timing) {
  std::cout << to_json(r, !omit_timing).dump() << "\n";
  return r.timed_out ? kExitTimeout : kExitOk;
}

struct GenFlags {
  std::size_t qubits = 0;
  std::size_t tcount = 0;
  std::size_t ccz = 0;
  std::size_t w_min = 2, w_max = 4;
  double cz_density = 1.0, z_density = 0.5;
  std::uint64_t seed = 0;
  std::string out;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw ConstructionError("cannot write " + path);
  f << text;
}

int cmd_gen(const std::string& family, const GenFlags& g) {
  json side;
  side["schema"] = "zxsim.instance/1";
  side["family"] = family;
  side["qubits"] = g.qubits;
  side["seed"] = g.seed;
  side["prng"] = Prng::kName;
  Circuit c;
  if (family == "pauli") {
    c = gen_pauli_exp({g.qubits, g.tcount, g.w_min, g.w_max, g.seed});
    side["tcount"] = g.tcount;
    side["w_min"] = g.w_min;
    side["w_max"] = g.w_max;
  } else {
    const HiddenShift hs = gen_hidden_shift({g.qubits, g.ccz, g.cz_density, g.z_density, g.seed});
    c = hs.circuit;
    side["ccz"] = g.ccz;
    side["cz_density"] = g.cz_density;
    side["z_density"] = g.z_density;
    side["shift"] = bit_string(hs.shift);
  }
  side["t_count"] = t_count(c, CczMode::SevenT);
  const std::string base = g.out.empty() ? family + "-" + std::to_string(g.qubits) + "-" + std::to_string(g.seed) : g.out;
  write_file(base + ".qasm", emit_qasm(c));
  write_file(base + ".json", side.dump(2) + "\n");
  std::cerr << "wrote " << base << ".qasm and " << base << ".json\n";
  return kExitOk;
}

struct BenchFlags {
  std::string family = "pauli";
  std::size_t qubits = 50;
  std::vector<std::size_t> sizes;
  std::size_t per_size = 1;
  std::string output;
};

int cmd_bench(const BenchFlags& b, const RunFlags& f, const GenFlags& g) {
  std::ofstream file;
  if (!b.output.empty()) {
    file.open(b.output);
    if (!file) throw ConstructionError("cannot write " + b.output);
  }
  std::ostream& out = b.output.empty() ? std::cout : file;
  out << csv_header() << std::flush;
  bool inconsistent = false;
  for (std::size_t size : b.sizes) {
    for (std::size_t i = 0; i < b.per_size; ++i) {
      const std::uint64_t seed = f.seed + i;
      RunFlags rf = f;
      SimConfig cfg = sim_config(rf);
      Circuit c;
      std::vector<int> shift;
      if (b.family == "pauli") {
        c = gen_pauli_exp({b.qubits, size, g.w_min, g.w_max, seed});
      } else {
        const HiddenShift hs = gen_hidden_shift({b.qubits, size, g.cz_density, g.z_density, seed});
        c = hs.circuit;
        shift = hs.shift;
        cfg.deterministic = true;
      }
      json spec;
      spec["family"] = b.family;
      spec["qubits"] = b.qubits;
      spec["size"] = size;
      spec["seed"] = seed;
      spec["t_count"] = t_count(c, cfg.ccz_mode);
      const RunRecord r = record_sample(c, seed, cfg, spec);
      if (!r.timed_out && !shift.empty() && r.bits != bit_string(shift)) {
        std::cerr << "hidden shift mismatch for size " << size << " seed " << seed << "\n";
        inconsistent = true;
      }
      out << csv_row(r, !f.omit_timing) << std::flush;
    }
  }
  return inconsistent ? kExitInconsistent : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Clifford+T simulation by ZX simplification and stabiliser decomposition"};
  app.require_subcommand(1);

  GenFlags gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a benchmark circuit and sidecar JSON");
  gen_cmd->require_subcommand(1);
  auto* gen_pauli = gen_cmd->add_subcommand("pauli", "Random Pauli exponentials");
  auto* gen_hs = gen_cmd->add_subcommand("hidden-shift", "Hidden shift over H, Z, CZ, CCZ");
  for (auto* sc : {gen_pauli, gen_hs}) {
    sc->add_option("--qubits", gen.qubits, "Number of qubits")->required();
    sc->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
    sc->add_option("--out", gen.out, "Output path prefix");
  }
  gen_pauli->add_option("--tcount", gen.tcount, "Number of exponentials")->required();
  gen_pauli->add_option("--w-min", gen.w_min)->capture_default_str();
  gen_pauli->add_option("--w-max", gen.w_max)->capture_default_str();
  gen_hs->add_option("--ccz", gen.ccz, "CCZ gates over both oracles (even)")->required();
  gen_hs->add_option("--cz-density", gen.cz_density)->capture_default_str();
  gen_hs->add_option("--z-density", gen.z_density)->capture_default_str();

  RunFlags run;
  auto* sample_cmd = app.add_subcommand("sample", "Sample one outcome from |0...0>");
  add_run_flags(sample_cmd, run);
  bool deterministic = false;
  sample_cmd->add_flag("--deterministic", deterministic, "Use independent single-qubit marginals");

  auto* amp_cmd = app.add_subcommand("amplitude", "Exact <out|U|in>");
  add_run_flags(amp_cmd, run);
  std::string in_bits, out_bits;
  amp_cmd->add_option("--in", in_bits, "Input bits, qubit 0 first (default all 0)");
  amp_cmd->add_option("--out", out_bits, "Output bits, qubit 0 first")->required();

  auto* marg_cmd = app.add_subcommand("marginal", "Exact probability of fixed output bits");
  add_run_flags(marg_cmd, run);
  std::vector<std::string> fixes;
  marg_cmd->add_option("--fix", fixes, "qubit=bit, repeatable")->required();

  BenchFlags bench;
  auto* bench_cmd = app.add_subcommand("bench", "Sample generated instances, one CSV row each");
  add_run_flags(bench_cmd, run, false);
  bench_cmd->add_option("--family", bench.family)->check(CLI::IsMember({"pauli", "hidden-shift"}))->capture_default_str();
  bench_cmd->add_option("--qubits", bench.qubits)->capture_default_str();
  bench_cmd->add_option("--sizes", bench.sizes, "T-counts or CCZ counts")->delimiter(',')->required();
  bench_cmd->add_option("--per-size", bench.per_size)->capture_default_str();
  bench_cmd->add_option("--output", bench.output, "CSV path (default stdout)");
  bench_cmd->add_option("--w-min", gen.w_min)->capture_default_str();
  bench_cmd->add_option("--w-max", gen.w_max)->capture_default_str();
  bench_cmd->add_option("--cz-density", gen.cz_density)->capture_default_str();
  bench_cmd->add_option("--z-density", gen.z_density)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen_pauli->parsed() ? "pauli" : "hidden-shift", gen);
    if (bench_cmd->parsed()) return cmd_bench(bench, run, gen);

    const Circuit c = load(run.circuit);
    SimConfig cfg = sim_config(run);
    if (sample_cmd->parsed()) {
      cfg.deterministic = deterministic;
      json spec = spec_echo("sample", run, c);
      spec["deterministic"] = deterministic;
      return emit(record_sample(c, run.seed, cfg, spec), run.omit_timing);
    }
    RunRecord r;
    r.spec = spec_echo(amp_cmd->parsed() ? "amplitude" : "marginal", run, c);
    Decomposition d;
    if (amp_cmd->parsed()) {
      const auto in = in_bits.empty() ? std::vector<int>(c.n_qubits, 0) : parse_bits(in_bits, c.n_qubits, "--in");
      const auto out = parse_bits(out_bits, c.n_qubits, "--out");
      r.spec["in"] = bit_string(in);
      r.spec["out"] = bit_string(out);
      r.value_name = "amplitude";
      d = amplitude(c, in, out, cfg);
    } else {
      std::map<std::size_t, int> fixed;
      for (const std::string& f : fixes) {
        const auto eq = f.find('=');
        if (eq == std::string::npos) throw ConstructionError("--fix expects qubit=bit, got '" + f + "'");
        const std::size_t q = std::stoul(f.substr(0, eq));
        const auto b = parse_bits(f.substr(eq + 1), 1, "--fix");
        fixed[q] = b[0];
      }
      json fj = json::object();
      for (const auto& [q, b] : fixed) fj[std::to_string(q)] = b;
      r.spec["fixed"] = fj;
      d = marginal(c, fixed, cfg);
    }
    r.timed_out = d.report.timed_out;
    r.value = d.value;
    r.report = d.report;
    return emit(r, run.omit_timing);
  } catch (const InconsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
