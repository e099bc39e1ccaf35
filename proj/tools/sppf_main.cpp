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

#include "CLI11.hpp"
#include "sppf/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"sppf: architecture-aware Pauli exponential synthesis"};
  app.require_subcommand(1);

  sppf::cli::SynthArgs synth;
  CLI::App* s = app.add_subcommand(
      "synth", "Synthesize a Pauli exponential into a circuit");
  s->add_option("--input", synth.input, "Pauli exponential text file")
      ->required();
  s->add_option("--topology", synth.topology,
                "Builtin topology name or edge-list file")
      ->required();
  s->add_option("--mapping", synth.mapping, "sppf | random | identity")
      ->capture_default_str();
  s->add_option("--seed", synth.seed, "Seed for the random mapping mode")
      ->capture_default_str();
  s->add_option("--output", synth.output, "Circuit output path (stdout if omitted)");
  s->add_option("--format", synth.format, "qasm | json")->capture_default_str();
  s->add_option("--stats", synth.stats_path, "Stats JSON output path");
  s->add_option("--tree", synth.tree_path,
                "Connectivity-tree parent array output path");
  s->add_flag("--allow-reorder", synth.allow_reorder,
              "Accept non-commuting gadget sets (circuit implements the "
              "processed-order product)");
  s->add_flag("--self-check", synth.self_check,
              "Verify the circuit against the dense oracle (small registers)");
  s->add_flag("--timing", synth.timing, "Include runtime_ms in the stats file");

  sppf::cli::VerifyArgs verify;
  CLI::App* v = app.add_subcommand(
      "verify", "Check a circuit against its Pauli exponential");
  v->add_option("--input", verify.input, "Pauli exponential text file")
      ->required();
  v->add_option("--circuit", verify.circuit, "Circuit file (qasm or json)")
      ->required();
  v->add_option("--mapping", verify.mapping,
                "Mapping JSON (or a stats file with a 'mapping' key)");
  v->add_option("--order", verify.order,
                "Processing order JSON array (or a stats file)");
  v->add_option("--tol", verify.tol, "Equivalence tolerance")
      ->capture_default_str();

  sppf::cli::BenchArgs bench;
  CLI::App* b = app.add_subcommand(
      "bench", "Random-workload benchmark sweep, CSV output");
  b->add_option("--topology", bench.topology, "Builtin topology name")
      ->capture_default_str();
  b->add_option("--gadgets-lo", bench.gadgets_lo, "Smallest gadget count")
      ->capture_default_str();
  b->add_option("--gadgets-hi", bench.gadgets_hi, "Largest gadget count")
      ->capture_default_str();
  b->add_option("--gadgets-step", bench.gadgets_step, "Gadget count step")
      ->capture_default_str();
  b->add_option("--samples", bench.samples, "Samples per size")
      ->capture_default_str();
  b->add_option("--seed", bench.seed, "Base seed")->capture_default_str();
  b->add_option("--mappings", bench.mappings,
                "Comma-separated mapping modes to compare")
      ->capture_default_str();
  b->add_option("--format", bench.format, "csv | json")
      ->capture_default_str();
  b->add_option("--output", bench.output, "Output path (stdout if omitted)");

  CLI11_PARSE(app, argc, argv);

  if (s->parsed()) return sppf::cli::cmd_synth(synth);
  if (v->parsed()) return sppf::cli::cmd_verify(verify);
  if (b->parsed()) return sppf::cli::cmd_bench(bench);
  return sppf::cli::kExitInputError;
}
