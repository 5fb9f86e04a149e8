// Copyright 2026 The qpartsep Authors
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

#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qpartsep/eigen.hpp"
#include "qpartsep/partition.hpp"
#include "qpartsep/ppt.hpp"
#include "qpartsep/reduction.hpp"
#include "qpartsep/statelib.hpp"
#include "state_io.hpp"

namespace qpartsep::cli {

namespace {

using nlohmann::json;

struct LoadedState {
  DensityMatrix rho;
  std::string display_name;
};

json read_json_input(const std::string& path, std::istream& stdin_stream) {
  json j;
  auto parse = [&](std::istream& s) {
    try {
      j = json::parse(s);
    } catch (const json::parse_error& e) {
      throw FileFormatError(std::string("not valid JSON: ") + e.what());
    }
  };
  if (path == "-") {
    parse(stdin_stream);
  } else {
    std::ifstream file(path);
    if (!file) {
      throw FileFormatError("cannot open file '" + path + "'");
    }
    parse(file);
  }
  return j;
}

LoadedState load_state(const std::string& path, std::istream& stdin_stream,
                       bool no_validate) {
  const StateFile sf = parse_state_json(read_json_input(path, stdin_stream));
  LoadedState loaded;
  loaded.display_name =
      (sf.metadata && !sf.metadata->name.empty()) ? sf.metadata->name : path;
  if (no_validate) {
    loaded.rho = DensityMatrix{sf.n_qubits, sf.matrix};
  } else {
    loaded.rho = validate_density(sf.matrix, sf.n_qubits);
  }
  return loaded;
}

Partition parse_label_for(const DensityMatrix& rho, const std::string& label) {
  Partition p = parse_partition_label(label);
  if (p.n() != rho.n_qubits) {
    throw PartitionError("partition '" + label + "' spans " +
                         std::to_string(p.n()) + " qubits but the state has " +
                         std::to_string(rho.n_qubits));
  }
  return p;
}

Tolerances verdict_tolerances(double verdict_tol) {
  if (verdict_tol < 0) {
    throw OutOfRange("tolerance must be nonnegative, got " +
                     std::to_string(verdict_tol));
  }
  Tolerances tol;
  tol.psd_tol = verdict_tol;
  return tol;
}

struct GenOptions {
  std::string kind;
  double x = 0.0;
  bool x_set = false;
  int n = 0;
  bool n_set = false;
  int rank = 4;
  int terms = 4;
  std::string partition;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

int do_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
  auto need_x = [&]() -> double {
    if (!opt.x_set) {
      throw OutOfRange("gen " + opt.kind + ": --x is required");
    }
    return opt.x;
  };
  auto need_n = [&]() -> int {
    if (!opt.n_set) {
      throw OutOfRange("gen " + opt.kind + ": --n is required");
    }
    if (opt.n < 1 || opt.n > kMaxQubits) {
      throw OutOfRange("gen " + opt.kind + ": --n must be in [1, " +
                       std::to_string(kMaxQubits) + "], got " +
                       std::to_string(opt.n));
    }
    return opt.n;
  };
  auto need_seed = [&]() -> std::uint64_t {
    if (!opt.seed_set) {
      throw OutOfRange("gen " + opt.kind +
                       ": --seed is required (no silent entropy)");
    }
    return opt.seed;
  };

  DensityMatrix rho;
  json params = json::object();
  if (opt.kind == "werner") {
    const double x = need_x();
    rho = werner(x);
    params["x"] = x;
  } else if (opt.kind == "example-prime") {
    const double x = need_x();
    rho = example_prime(x);
    params["x"] = x;
  } else if (opt.kind == "example-dprime") {
    const double x = need_x();
    rho = example_dprime(x);
    params["x"] = x;
  } else if (opt.kind == "ghz") {
    const int n = need_n();
    rho = projector(ghz(n), n);
    params["n"] = n;
  } else if (opt.kind == "maximally-mixed") {
    const int n = need_n();
    const int dim = qubit_dimension(n);
    ComplexMatrix m = ComplexMatrix::identity(dim);
    m *= 1.0 / dim;
    rho = DensityMatrix{n, std::move(m)};
    params["n"] = n;
  } else if (opt.kind == "random-pure") {
    const int n = need_n();
    const auto seed = need_seed();
    rho = projector(random_pure(n, seed), n);
    params["n"] = n;
    params["seed"] = seed;
  } else if (opt.kind == "random-mixed") {
    const int n = need_n();
    const auto seed = need_seed();
    rho = random_mixed(n, opt.rank, seed);
    params["n"] = n;
    params["rank"] = opt.rank;
    params["seed"] = seed;
  } else if (opt.kind == "random-separable") {
    if (opt.partition.empty()) {
      throw OutOfRange("gen random-separable: --partition is required");
    }
    const auto seed = need_seed();
    Partition p = parse_partition_label(opt.partition);
    if (p.n() > kMaxQubits) {
      throw OutOfRange("gen random-separable: partition spans " +
                       std::to_string(p.n()) + " qubits; the cap is " +
                       std::to_string(kMaxQubits));
    }
    rho = random_partition_separable(p, opt.terms, seed);
    params["partition"] = partition_label(p);
    params["terms"] = opt.terms;
    params["seed"] = seed;
  } else {
    err << "error: unknown gen kind '" << opt.kind
        << "' (expected werner, example-prime, example-dprime, ghz, "
           "maximally-mixed, random-pure, random-mixed, random-separable)\n";
    return 1;
  }

  write_state(out, to_state_file(rho, opt.kind, "qpartsep gen", params));
  return 0;
}

int do_validate(const std::string& file, std::istream& in, std::ostream& out,
                std::ostream& err) {
  const StateFile sf = parse_state_json(read_json_input(file, in));
  out << "file: " << file << "\n";
  out << "n_qubits: " << sf.n_qubits << " (dim " << (1 << sf.n_qubits)
      << ")\n";
  const Tolerances tol;
  try {
    validate_density(sf.matrix, sf.n_qubits, tol);
  } catch (const Error& e) {
    err << "error: validation failed: " << e.what() << "\n";
    return 3;
  }
  out << "hermiticity defect: " << hermiticity_defect(sf.matrix) << " (tol "
      << tol.herm_tol << ")\n";
  const Complex tr = trace(sf.matrix);
  out << "trace: " << tr.real() << " (tol " << tol.trace_tol << ")\n";
  out << "min eigenvalue: " << hermitian_eigenvalues(sf.matrix, tol).front()
      << " (psd tol " << tol.psd_tol << ")\n";
  out << "valid density matrix\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{
      "Decides a necessary condition for partial separability of N-qubit "
      "states: reduce across a partition to a 4x4 bipartite state and apply "
      "the PPT test."};
  app.name("qpartsep");
  app.require_subcommand(1);

  std::string file;
  std::string partition;
  double tol = Tolerances{}.psd_tol;
  bool as_json = false;
  bool no_validate = false;

  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "state file, or '-' for stdin")->required();
    cmd->add_flag("--no-validate", no_validate,
                  "skip density-matrix validation of the input");
  };
  auto add_tol = [&](CLI::App* cmd) {
    cmd->add_option("--tol", tol,
                    "verdict tolerance: NPT when min PT eigenvalue < -tol")
        ->envname("QPARTSEP_TOL");
  };

  CLI::App* c_validate = app.add_subcommand(
      "validate", "check a state file against the density-matrix invariants");
  c_validate->add_option("file", file, "state file, or '-' for stdin")
      ->required();

  CLI::App* c_reorder = app.add_subcommand(
      "reorder", "relabel qubits so the partition blocks are contiguous");
  add_file(c_reorder);
  c_reorder->add_option("--partition", partition, "partition label, e.g. B|AC")
      ->required();

  CLI::App* c_reduce = app.add_subcommand(
      "reduce", "reduce across a partition to a 4x4 bipartite state");
  add_file(c_reduce);
  c_reduce->add_option("--partition", partition, "partition label")->required();

  CLI::App* c_ppt = app.add_subcommand(
      "ppt", "reduce across one partition and run the PPT test");
  add_file(c_ppt);
  c_ppt->add_option("--partition", partition, "partition label")->required();
  add_tol(c_ppt);
  c_ppt->add_flag("--json", as_json, "emit the report as JSON");

  CLI::App* c_scan =
      app.add_subcommand("scan", "run the PPT test across every partition");
  add_file(c_scan);
  add_tol(c_scan);
  c_scan->add_flag("--json", as_json, "emit the report as JSON");

  GenOptions gen;
  CLI::App* c_gen = app.add_subcommand("gen", "generate a state file");
  c_gen->add_option("kind", gen.kind,
                    "werner | example-prime | example-dprime | ghz | "
                    "maximally-mixed | random-pure | random-mixed | "
                    "random-separable")
      ->required();
  CLI::Option* x_opt = c_gen->add_option("--x", gen.x, "singlet fraction");
  CLI::Option* n_opt = c_gen->add_option("--n", gen.n, "qubit count");
  c_gen->add_option("--rank", gen.rank, "mixture rank for random-mixed");
  c_gen->add_option("--terms", gen.terms, "product terms for random-separable");
  c_gen->add_option("--partition", gen.partition,
                    "partition label for random-separable");
  CLI::Option* seed_opt =
      c_gen->add_option("--seed", gen.seed, "PRNG seed (64-bit)");

  CLI::App* c_construct = app.add_subcommand(
      "construct",
      "assemble a partially inseparable state from 4x4 blocks (spec file)");
  c_construct->add_option("spec", file, "constructor spec file, or '-'")
      ->required();

  try {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("qpartsep");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  gen.x_set = x_opt->count() > 0;
  gen.n_set = n_opt->count() > 0;
  gen.seed_set = seed_opt->count() > 0;

  try {
    if (c_validate->parsed()) {
      return do_validate(file, in, out, err);
    }

    if (c_reorder->parsed()) {
      const LoadedState st = load_state(file, in, no_validate);
      const Partition p = parse_label_for(st.rho, partition);
      const DensityMatrix result = reorder(st.rho, p);
      write_state(out, to_state_file(result, st.display_name,
                                     "qpartsep reorder",
                                     {{"partition", partition_label(p)}}));
      return 0;
    }

    if (c_reduce->parsed()) {
      const LoadedState st = load_state(file, in, no_validate);
      const Partition p = parse_label_for(st.rho, partition);
      const ReducedState rs = reduce(st.rho, p);
      write_state(out, to_state_file(DensityMatrix{2, rs.mat}, st.display_name,
                                     "qpartsep reduce",
                                     {{"partition", partition_label(p)}}));
      return 0;
    }

    if (c_ppt->parsed() || c_scan->parsed()) {
      const LoadedState st = load_state(file, in, no_validate);
      const Tolerances tols = verdict_tolerances(tol);
      Report report;
      report.state = st.display_name;
      report.tolerance = tols.psd_tol;
      if (c_ppt->parsed()) {
        const Partition p = parse_label_for(st.rho, partition);
        const ReducedState rs = reduce(st.rho, p);
        report.records.push_back(
            record_from_verdict(ppt_verdict(rs, tols), rs.mat));
      } else {
        for (const Partition& p : enumerate_partitions(st.rho.n_qubits)) {
          const ReducedState rs = reduce(st.rho, p);
          report.records.push_back(
              record_from_verdict(ppt_verdict(rs, tols), rs.mat));
        }
      }
      if (as_json) {
        out << report_to_json(report).dump(2) << "\n";
      } else {
        write_report_text(out, report, c_ppt->parsed());
      }
      return 0;
    }

    if (c_gen->parsed()) {
      return do_gen(gen, out, err);
    }

    if (c_construct->parsed()) {
      const ConstructorSpec spec =
          parse_constructor_spec(read_json_input(file, in));
      const DensityMatrix rho = construct_inseparable(spec);
      write_state(out,
                  to_state_file(rho, "constructed", "qpartsep construct",
                                {{"partition",
                                  partition_label(spec.partition)}}));
      return 0;
    }
  } catch (const FileFormatError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PartitionError& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const NotHermitian& e) {
    err << "error: validation failed: " << e.what() << "\n";
    return 3;
  } catch (const TraceNotOne& e) {
    err << "error: validation failed: " << e.what() << "\n";
    return 3;
  } catch (const NotPositive& e) {
    err << "error: validation failed: " << e.what() << "\n";
    return 3;
  } catch (const DimensionMismatch& e) {
    err << "error: validation failed: " << e.what() << "\n";
    return 3;
  } catch (const NotNormalized& e) {
    err << "error: validation failed: " << e.what() << "\n";
    return 3;
  } catch (const StateSpecError& e) {
    err << "error: validation failed: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  err << "error: no subcommand executed\n";
  return 1;
}

}  // namespace qpartsep::cli
