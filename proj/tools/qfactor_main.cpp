#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qfactor/artifact.hpp"
#include "qfactor/compiler.hpp"
#include "qfactor/pauli_expansion.hpp"
#include "qfactor/qaoa.hpp"
#include "qfactor/version.hpp"

namespace {

using namespace qfactor;

std::vector<std::uint64_t> select_numbers(const std::vector<std::uint64_t>& picked, bool all) {
  if (all) {
    if (!picked.empty()) throw std::invalid_argument("give either N arguments or --all, not both");
    return semiprime_corpus();
  }
  if (picked.empty()) throw std::invalid_argument("specify at least one N or pass --all");
  return picked;
}

InitPattern resolve_pattern(const std::string& init, Model model) {
  return init.empty() ? default_pattern(model) : parse_pattern(init);
}

/// Writes to the path, or to stdout when the path is "-".
void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  write_text_file(path, text);
}

void cmd_encode(const std::vector<std::uint64_t>& numbers) {
  for (const std::uint64_t N : numbers) {
    std::cout << format_instance_line(Instance::make(N)) << '\n';
  }
}

struct LayerCounts {
  int cnots;
  int rzs;
};

LayerCounts layer_counts(const PauliZExpansion& pauli) {
  int rzs = 0;
  for (const auto& [mask, coeff] : pauli.terms) {
    (void)coeff;
    if (mask != 0) ++rzs;
  }
  return {cnot_count(pauli), rzs};
}

void cmd_resources(const std::vector<std::uint64_t>& numbers, const std::string& qasm_path,
                   const std::string& model_str, double gamma, double beta) {
  std::printf("%-6s %-3s %-11s %-11s %-8s %-8s %-8s %-8s\n", "N", "n", "cnots_qubo",
              "cnots_pubo", "rz_qubo", "rz_pubo", "rx_qubo", "rx_pubo");
  for (const std::uint64_t N : numbers) {
    const Instance inst = Instance::make(N);
    const BinaryPolynomial f = build_F(inst);
    const LayerCounts qubo = layer_counts(to_pauli(f));
    const LayerCounts pubo = layer_counts(to_pauli(square(f)));
    std::printf("%-6llu %-3d %-11d %-11d %-8d %-8d %-8d %-8d\n",
                static_cast<unsigned long long>(N), inst.n, qubo.cnots, pubo.cnots, qubo.rzs,
                pubo.rzs, inst.n, inst.n);
  }
  if (!qasm_path.empty()) {
    if (numbers.size() != 1) {
      throw std::invalid_argument("--emit-qasm needs exactly one N");
    }
    const Instance inst = Instance::make(numbers.front());
    const Model model = parse_model(model_str);
    BinaryPolynomial poly = build_F(inst);
    if (model == Model::pubo) poly = square(poly);
    const Circuit circuit = synthesize_layer(to_pauli(poly), gamma, beta, model);
    write_output(qasm_path, emit_qasm(circuit));
  }
}

void print_population_report(const PopulationReport& report, int n) {
  std::printf("  populations:\n");
  int rank = 1;
  for (const PopulationEntry& entry : report.top) {
    std::printf("    %2d  |%s>  %.6f%s\n", rank, bitstring(entry.index, n).c_str(),
                entry.probability, entry.is_solution ? "  solution" : "");
    ++rank;
  }
  std::printf("        others  %.6f\n", report.others);
  std::printf("  solution ranks first: %s\n", report.solution_first ? "yes" : "no");
}

void cmd_factor(std::uint64_t N, const std::string& model_str, int layers, int restarts,
                std::uint64_t seed, const std::string& init_str, std::string out_path) {
  const Instance inst = Instance::make(N);
  const Model model = parse_model(model_str);
  const InitPattern init = resolve_pattern(init_str, model);
  const QaoaProblem problem = make_problem(inst, model, init);
  const RunRecord record = depth_sweep(problem, layers, seed, restarts);

  const DepthRecord& last = record.depths.back();
  std::printf("N=%llu  model=%s  init=%s  layers=%d  restarts=%d  seed=%llu\n",
              static_cast<unsigned long long>(N), std::string(model_name(model)).c_str(),
              std::string(pattern_name(init)).c_str(), layers, restarts,
              static_cast<unsigned long long>(seed));
  std::printf("  final depth %d: C_min=%.10g  fidelity=%.6f  confidence=%.6f  converged=%s\n",
              last.layers, last.c_min, last.fidelity, last.confidence,
              last.converged ? "yes" : "no");
  print_population_report(last.populations, inst.n);

  if (out_path.empty()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "run_N%llu_%s.json", static_cast<unsigned long long>(N),
                  std::string(model_name(model)).c_str());
    out_path = buf;
  }
  const RunConfig config{N, model, init, layers, restarts, seed};
  write_output(out_path, render_document(run_document(inst, config, record)));
  if (out_path != "-") std::printf("  wrote %s\n", out_path.c_str());
}

void cmd_spectrum(std::uint64_t N, const std::string& model_str, const std::string& out_path) {
  const Instance inst = Instance::make(N);
  const Model model = parse_model(model_str);
  BinaryPolynomial poly = build_F(inst);
  if (model == Model::pubo) poly = square(poly);
  const SpectrumReport report = spectrum_report(diagonal(poly, model), inst);
  std::ostringstream csv;
  write_spectrum_csv(csv, report, inst);
  write_output(out_path, csv.str());
}

void cmd_sweep(const std::vector<std::uint64_t>& numbers, int layers, int seeds, int restarts,
               const std::string& out_path) {
  std::vector<SweepRow> rows;
  for (const std::uint64_t N : numbers) {
    const Instance inst = Instance::make(N);
    for (const Model model : {Model::qubo, Model::pubo}) {
      const QaoaProblem problem = make_problem(inst, model);
      for (int seed = 0; seed < seeds; ++seed) {
        const RunRecord record =
            depth_sweep(problem, layers, static_cast<std::uint64_t>(seed), restarts);
        const DepthRecord& last = record.depths.back();
        const StateVector state = run_ansatz(problem, last.params);
        rows.push_back({N, model, static_cast<std::uint64_t>(seed), last.c_min, last.fidelity,
                        last.confidence, solution_rank(state, inst)});
      }
    }
  }
  std::ostringstream csv;
  write_sweep_csv(csv, rows);
  write_output(out_path, csv.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench comparing ground-state (pubo) and kernel-subspace (qubo) "
               "factorization ansaetze: encodings, gate costs, exact QAOA simulation and "
               "diagnostics."};
  app.set_version_flag("--version", std::string(qfactor::kVersion));
  app.require_subcommand(1);

  const auto is_model = CLI::IsMember({"qubo", "pubo"});
  const auto is_pattern = CLI::IsMember({"plus", "alternating"});

  std::vector<std::uint64_t> enc_numbers;
  bool enc_all = false;
  CLI::App* enc = app.add_subcommand("encode", "Print register sizes, factors and solution "
                                               "bitstrings for semiprime instances");
  enc->add_option("N", enc_numbers, "odd semiprimes to encode");
  enc->add_flag("--all", enc_all, "use the bundled corpus");
  enc->callback([&] { cmd_encode(select_numbers(enc_numbers, enc_all)); });

  std::vector<std::uint64_t> res_numbers;
  bool res_all = false;
  std::string res_qasm;
  std::string res_model = "qubo";
  double res_gamma = 0.5;
  double res_beta = 0.25;
  CLI::App* res = app.add_subcommand("resources", "Per-layer gate counts for both encodings; "
                                                  "optionally export one layer as OpenQASM");
  res->add_option("N", res_numbers, "odd semiprimes to tabulate");
  res->add_flag("--all", res_all, "use the bundled corpus");
  res->add_option("--emit-qasm", res_qasm, "write a single synthesized layer here ('-' for stdout)");
  res->add_option("--model", res_model, "encoding for --emit-qasm")->check(is_model);
  res->add_option("--gamma", res_gamma, "phase angle for --emit-qasm");
  res->add_option("--beta", res_beta, "mixer angle for --emit-qasm");
  res->callback([&] {
    cmd_resources(select_numbers(res_numbers, res_all), res_qasm, res_model, res_gamma, res_beta);
  });

  std::uint64_t fac_N = 0;
  std::string fac_model = "qubo";
  int fac_layers = 10;
  int fac_restarts = 10;
  std::uint64_t fac_seed = 0;
  std::string fac_init;
  std::string fac_out;
  CLI::App* fac = app.add_subcommand("factor", "Optimize the ansatz depth by depth and write "
                                               "the result document");
  fac->add_option("N", fac_N, "odd semiprime to factor")->required();
  fac->add_option("--model", fac_model, "encoding")->check(is_model);
  fac->add_option("--layers", fac_layers, "sweep depth")->check(CLI::PositiveNumber);
  fac->add_option("--restarts", fac_restarts, "optimizer starts per depth")
      ->check(CLI::PositiveNumber);
  fac->add_option("--seed", fac_seed, "master seed");
  fac->add_option("--init", fac_init, "initial state pattern (default: alternating for qubo, "
                                      "plus for pubo)")
      ->check(is_pattern);
  fac->add_option("--out", fac_out, "result document path ('-' for stdout; default "
                                    "run_N<N>_<model>.json)");
  fac->callback([&] {
    cmd_factor(fac_N, fac_model, fac_layers, fac_restarts, fac_seed, fac_init, fac_out);
  });

  std::uint64_t spec_N = 0;
  std::string spec_model = "qubo";
  std::string spec_out = "-";
  CLI::App* spec = app.add_subcommand("spectrum", "CSV of the normalized diagonal spectrum");
  spec->add_option("N", spec_N, "odd semiprime")->required();
  spec->add_option("--model", spec_model, "encoding")->check(is_model);
  spec->add_option("--out", spec_out, "CSV path ('-' for stdout)");
  spec->callback([&] { cmd_spectrum(spec_N, spec_model, spec_out); });

  std::vector<std::uint64_t> sw_numbers;
  bool sw_all = false;
  int sw_layers = 10;
  int sw_seeds = 1;
  int sw_restarts = 10;
  std::string sw_out = "-";
  CLI::App* sw = app.add_subcommand("sweep", "Depth-sweep both encodings across instances and "
                                             "seeds; CSV summary of the final depth");
  sw->add_option("N", sw_numbers, "odd semiprimes to sweep");
  sw->add_flag("--all", sw_all, "use the bundled corpus");
  sw->add_option("--layers", sw_layers, "sweep depth")->check(CLI::PositiveNumber);
  sw->add_option("--seeds", sw_seeds, "seed count (seeds 0..k-1)")->check(CLI::PositiveNumber);
  sw->add_option("--restarts", sw_restarts, "optimizer starts per depth")
      ->check(CLI::PositiveNumber);
  sw->add_option("--out", sw_out, "CSV path ('-' for stdout)");
  sw->callback([&] {
    cmd_sweep(select_numbers(sw_numbers, sw_all), sw_layers, sw_seeds, sw_restarts, sw_out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
