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

// The CLI command layer. Each cmd_* function takes parsed options and
// returns a process exit code: 0 success (or verification pass), 1
// verification failure, 2 input error, 3 internal invariant violation.
// Keeping these as plain functions lets the tests drive them in-process.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sppf/bench.hpp"
#include "sppf/circuit.hpp"
#include "sppf/errors.hpp"
#include "sppf/generator.hpp"
#include "sppf/oracle.hpp"
#include "sppf/synth.hpp"
#include "sppf/topology.hpp"

namespace sppf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInternalError = 3;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write '" + path + "'");
  out << content;
}

// A topology argument is a file path when such a file exists, otherwise a
// builtin name like "line:16" or "guadalupe".
inline CouplingGraph load_topology(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec))
    return parse_edge_list(read_file(arg));
  return builtin_topology(arg);
}

inline nlohmann::json mapping_json(const QubitMapping& m) {
  nlohmann::json j = nlohmann::json::object();
  for (size_t l = 0; l < m.log_to_phys.size(); ++l)
    j[std::to_string(l)] = m.log_to_phys[l];
  return j;
}

inline QubitMapping mapping_from_json(const nlohmann::json& j, size_t n_log,
                                      size_t n_phys) {
  if (!j.is_object()) throw input_error("mapping file must hold a JSON object");
  const nlohmann::json& obj = j.contains("mapping") ? j.at("mapping") : j;
  QubitMapping m;
  m.log_to_phys.assign(n_log, 0);
  m.phys_to_log.assign(n_phys, -1);
  if (obj.size() != n_log)
    throw input_error("mapping has " + std::to_string(obj.size()) +
                      " entries, expected " + std::to_string(n_log));
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    size_t l = 0;
    try {
      l = std::stoul(it.key());
    } catch (const std::exception&) {
      throw input_error("mapping key '" + it.key() + "' is not an index");
    }
    if (!it.value().is_number_unsigned())
      throw input_error("mapping value for '" + it.key() +
                        "' is not a qubit index");
    uint32_t p = it.value().get<uint32_t>();
    if (l >= n_log || p >= n_phys)
      throw input_error("mapping entry out of range");
    if (m.phys_to_log[p] != -1)
      throw input_error("mapping is not injective");
    m.assign(static_cast<uint32_t>(l), p);
  }
  return m;
}

inline nlohmann::json parse_json_file(const std::string& path) {
  try {
    return nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error("'" + path + "': " + e.what());
  }
}

// Connectivity-tree parent array: -1 at the root, null off the tree.
inline nlohmann::json tree_json(const ConnectivityTree& t) {
  nlohmann::json arr = nlohmann::json::array();
  for (int32_t p : t.parent) {
    if (p == ConnectivityTree::kAbsent)
      arr.push_back(nullptr);
    else
      arr.push_back(p);
  }
  return arr;
}

struct SynthArgs {
  std::string input;
  std::string topology;
  std::string mapping = "sppf";  // sppf | random | identity
  uint64_t seed = 0;
  std::string output;
  std::string format = "qasm";  // qasm | json
  std::string stats_path;
  std::string tree_path;
  bool allow_reorder = false;
  bool self_check = false;
  bool timing = false;  // include runtime_ms in the stats file
};

inline MappingMode parse_mapping_mode(const std::string& name) {
  if (name == "sppf") return MappingMode::Sppf;
  if (name == "random") return MappingMode::Random;
  if (name == "identity") return MappingMode::Identity;
  throw input_error("unknown mapping mode '" + name +
                    "' (expected sppf, random or identity)");
}

inline nlohmann::json stats_json(const SynthResult& r, bool timing) {
  nlohmann::json j;
  j["cnot_count"] = r.stats.cnot_count;
  j["cnot_depth"] = r.stats.cnot_depth;
  j["total_gates"] = r.stats.total_gates;
  j["gadget_order"] = r.processed_order;
  j["mapping"] = mapping_json(r.mapping);
  if (timing) j["runtime_ms"] = r.stats.runtime_ms;
  return j;
}

inline int cmd_synth(const SynthArgs& args, std::ostream& err = std::cerr) {
  try {
    if (args.format != "json" && args.format != "qasm")
      throw input_error("unknown format '" + args.format + "'");
    PauliExponential e = parse_exponential(read_file(args.input));
    if (e.gadgets.empty())
      throw input_error("input '" + args.input + "' contains no gadgets");
    CouplingGraph g = load_topology(args.topology);

    SynthOptions opts;
    opts.mode = parse_mapping_mode(args.mapping);
    opts.seed = args.seed;
    opts.allow_reorder = args.allow_reorder;
    SynthResult r = synthesize(e, g, opts);
    for (const std::string& note : r.notes) err << "warning: " << note << "\n";

    if (args.self_check) {
      if (g.n_qubits > oracle::kMaxOracleQubits) {
        err << "warning: self-check skipped, register too wide for the "
               "oracle\n";
      } else {
        std::vector<size_t> order(r.processed_order.rbegin(),
                                  r.processed_order.rend());
        PauliExponential placed(g.n_qubits);
        for (const PauliGadget& gad : e.gadgets) {
          PauliString s(g.n_qubits);
          for (size_t l = 0; l < gad.string.size(); ++l)
            s[r.mapping.log_to_phys[l]] = gad.string[l];
          placed.add(PauliGadget(std::move(s), gad.angle));
        }
        auto target = oracle::exponential_unitary(placed, order);
        if (!oracle::equiv_up_to_phase(oracle::circuit_unitary(r.circuit),
                                       target, 1e-9))
          throw internal_error("self-check failed: circuit does not match "
                               "the gadget product");
      }
    }

    std::string text =
        args.format == "json" ? to_json(r.circuit) : to_qasm(r.circuit);
    if (args.output.empty())
      std::cout << text;
    else
      write_file(args.output, text);
    if (!args.stats_path.empty())
      write_file(args.stats_path, stats_json(r, args.timing).dump(2) + "\n");
    if (!args.tree_path.empty())
      write_file(args.tree_path, tree_json(r.tree).dump() + "\n");
    return kExitOk;
  } catch (const input_error& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& ex) {
    err << "internal error: " << ex.what() << "\n";
    return kExitInternalError;
  }
}

struct VerifyArgs {
  std::string input;
  std::string circuit;
  std::string mapping;  // optional: mapping json or a stats file
  std::string order;    // optional: order json array or a stats file
  double tol = 1e-9;
};

inline int cmd_verify(const VerifyArgs& args, std::ostream& err = std::cerr) {
  try {
    PauliExponential e = parse_exponential(read_file(args.input));
    Circuit c = parse_circuit(read_file(args.circuit));
    if (c.n_qubits > oracle::kMaxOracleQubits)
      throw input_error("circuit register too wide for the oracle (n = " +
                        std::to_string(c.n_qubits) + ", max " +
                        std::to_string(oracle::kMaxOracleQubits) + ")");
    if (e.n_qubits > c.n_qubits)
      throw input_error("exponential is wider than the circuit register");

    QubitMapping mapping = QubitMapping::trivial(e.n_qubits, c.n_qubits);
    if (!args.mapping.empty())
      mapping = mapping_from_json(parse_json_file(args.mapping), e.n_qubits,
                                  c.n_qubits);

    std::vector<size_t> processed;
    if (!args.order.empty()) {
      nlohmann::json j = parse_json_file(args.order);
      const nlohmann::json& arr =
          j.is_object() && j.contains("gadget_order") ? j.at("gadget_order") : j;
      if (!arr.is_array()) throw input_error("order file must hold an array");
      for (const auto& v : arr) {
        if (!v.is_number_unsigned())
          throw input_error("order entries must be gadget indices");
        processed.push_back(v.get<size_t>());
      }
    } else {
      for (size_t k = 0; k < e.gadgets.size(); ++k) processed.push_back(k);
    }
    // Gadgets missing from the order must be identity strings; anything else
    // would change the operator.
    std::vector<char> listed(e.gadgets.size(), 0);
    for (size_t k : processed) {
      if (k >= e.gadgets.size() || listed[k])
        throw input_error("order is not a list of distinct gadget indices");
      listed[k] = 1;
    }
    for (size_t k = 0; k < e.gadgets.size(); ++k)
      if (!listed[k] && e.gadgets[k].weight() != 0)
        throw input_error("gadget " + std::to_string(k) +
                          " missing from the processing order");

    PauliExponential placed(c.n_qubits);
    for (const PauliGadget& gad : e.gadgets) {
      PauliString s(c.n_qubits);
      for (size_t l = 0; l < gad.string.size(); ++l)
        s[mapping.log_to_phys[l]] = gad.string[l];
      placed.add(PauliGadget(std::move(s), gad.angle));
    }
    std::vector<size_t> order(processed.rbegin(), processed.rend());
    auto target = oracle::exponential_unitary(placed, order);
    auto actual = oracle::circuit_unitary(c);
    bool ok = oracle::equiv_up_to_phase(actual, target, args.tol);
    std::cout << (ok ? "PASS" : "FAIL")
              << ": circuit vs gadget product (tol=" << args.tol << ")\n";
    return ok ? kExitOk : kExitVerifyFailed;
  } catch (const input_error& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& ex) {
    err << "internal error: " << ex.what() << "\n";
    return kExitInternalError;
  }
}

struct BenchArgs {
  std::string topology = "line:16";
  uint32_t gadgets_lo = 2;
  uint32_t gadgets_hi = 20;
  uint32_t gadgets_step = 2;
  uint32_t samples = 20;
  uint64_t seed = 0;
  std::string mappings = "sppf,random";
  std::string format = "csv";  // csv | json
  std::string output;          // path; stdout when empty
};

inline int cmd_bench(const BenchArgs& args, std::ostream& err = std::cerr) {
  try {
    BenchConfig cfg;
    cfg.topology = args.topology;
    cfg.gadgets_lo = args.gadgets_lo;
    cfg.gadgets_hi = args.gadgets_hi;
    cfg.gadgets_step = args.gadgets_step;
    cfg.samples = args.samples;
    cfg.seed = args.seed;
    cfg.modes.clear();
    std::string token;
    std::istringstream modes(args.mappings);
    while (std::getline(modes, token, ','))
      if (!token.empty()) cfg.modes.push_back(parse_mapping_mode(token));
    if (args.format != "csv" && args.format != "json")
      throw input_error("unknown bench format '" + args.format + "'");
    auto rows = run_bench(cfg);
    std::string text =
        args.format == "json" ? bench_json(rows) : bench_csv(rows);
    if (args.output.empty())
      std::cout << text;
    else
      write_file(args.output, text);
    return kExitOk;
  } catch (const input_error& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& ex) {
    err << "internal error: " << ex.what() << "\n";
    return kExitInternalError;
  }
}

}  // namespace sppf::cli
