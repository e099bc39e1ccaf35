// Copyright 2026 The sppf authors
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

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "sppf/errors.hpp"
#include "sppf/generator.hpp"
#include "sppf/synth.hpp"
#include "sppf/topology.hpp"

namespace sppf {

// Benchmark sweep: for each gadget count in [lo, hi] stepping by `step`,
// draws `samples` random exponentials and synthesizes each with every
// requested mapping mode, reporting per-(mode, size) averages.
struct BenchConfig {
  std::string topology = "line:16";
  uint32_t gadgets_lo = 2;
  uint32_t gadgets_hi = 20;
  uint32_t gadgets_step = 2;
  uint32_t samples = 20;
  uint64_t seed = 0;
  std::vector<MappingMode> modes = {MappingMode::Sppf, MappingMode::Random};

  void validate() const {
    if (samples < 1) throw input_error("samples must be >= 1");
    if (gadgets_step < 1) throw input_error("step must be >= 1");
    if (gadgets_hi < gadgets_lo) throw input_error("gadget range is empty");
    if (modes.empty()) throw input_error("no mapping modes selected");
  }
};

struct BenchRow {
  std::string topology;
  MappingMode mode;
  uint32_t n_gadgets = 0;
  double mean_cnot_count = 0.0;
  double mean_cnot_depth = 0.0;
  double mean_runtime_ms = 0.0;
};

// Per-sample seed protocol: splitmix64 over (base seed, gadget count,
// sample index). The same exponential is fed to every mapping mode.
inline uint64_t sample_seed(uint64_t base, uint32_t n_gadgets,
                            uint32_t sample_index) {
  return detail::splitmix64(base ^ (static_cast<uint64_t>(n_gadgets) << 32) ^
                            sample_index);
}

inline unsigned bench_thread_cap() {
  if (const char* env = std::getenv("SPPF_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

inline std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
  cfg.validate();
  const CouplingGraph graph = builtin_topology(cfg.topology);

  std::vector<uint32_t> sizes;
  for (uint32_t s = cfg.gadgets_lo; s <= cfg.gadgets_hi; s += cfg.gadgets_step)
    sizes.push_back(s);

  struct Cell {
    size_t cnots = 0;
    size_t depth = 0;
    double ms = 0.0;
  };
  // results[size_idx][mode_idx][sample]
  std::vector<std::vector<std::vector<Cell>>> results(
      sizes.size(),
      std::vector<std::vector<Cell>>(cfg.modes.size(),
                                     std::vector<Cell>(cfg.samples)));

  const size_t total_jobs = sizes.size() * cfg.samples;
  std::atomic<size_t> next_job{0};
  auto worker = [&]() {
    for (;;) {
      size_t job = next_job.fetch_add(1);
      if (job >= total_jobs) break;
      size_t size_idx = job / cfg.samples;
      uint32_t sample = static_cast<uint32_t>(job % cfg.samples);
      uint64_t seed = sample_seed(cfg.seed, sizes[size_idx], sample);
      PauliExponential e =
          random_exponential(graph.n_qubits, sizes[size_idx], seed);
      for (size_t m = 0; m < cfg.modes.size(); ++m) {
        SynthOptions opts;
        opts.mode = cfg.modes[m];
        opts.seed = seed;
        opts.allow_reorder = true;
        SynthResult r = synthesize(e, graph, opts);
        results[size_idx][m][sample] = {r.stats.cnot_count,
                                        r.stats.cnot_depth,
                                        r.stats.runtime_ms};
      }
    }
  };

  unsigned n_threads =
      std::min<unsigned>(bench_thread_cap(),
                         static_cast<unsigned>(std::max<size_t>(total_jobs, 1)));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // deterministic merge in (size, mode) order
  std::vector<BenchRow> rows;
  for (size_t s = 0; s < sizes.size(); ++s) {
    for (size_t m = 0; m < cfg.modes.size(); ++m) {
      BenchRow row;
      row.topology = cfg.topology;
      row.mode = cfg.modes[m];
      row.n_gadgets = sizes[s];
      for (const Cell& c : results[s][m]) {
        row.mean_cnot_count += static_cast<double>(c.cnots);
        row.mean_cnot_depth += static_cast<double>(c.depth);
        row.mean_runtime_ms += c.ms;
      }
      row.mean_cnot_count /= cfg.samples;
      row.mean_cnot_depth /= cfg.samples;
      row.mean_runtime_ms /= cfg.samples;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

inline std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out =
      "topology,mapping_mode,n_gadgets,mean_cnot_count,mean_cnot_depth,"
      "mean_runtime_ms\n";
  char buf[256];
  for (const BenchRow& r : rows) {
    std::snprintf(buf, sizeof(buf), "%s,%s,%u,%.6g,%.6g,%.6g\n",
                  r.topology.c_str(), mapping_mode_name(r.mode), r.n_gadgets,
                  r.mean_cnot_count, r.mean_cnot_depth, r.mean_runtime_ms);
    out += buf;
  }
  return out;
}

inline std::string bench_json(const std::vector<BenchRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const BenchRow& r : rows) {
    nlohmann::json jr;
    jr["topology"] = r.topology;
    jr["mapping_mode"] = mapping_mode_name(r.mode);
    jr["n_gadgets"] = r.n_gadgets;
    jr["mean_cnot_count"] = r.mean_cnot_count;
    jr["mean_cnot_depth"] = r.mean_cnot_depth;
    jr["mean_runtime_ms"] = r.mean_runtime_ms;
    arr.push_back(std::move(jr));
  }
  return arr.dump(2) + "\n";
}

}  // namespace sppf
