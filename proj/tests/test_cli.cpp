#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

#include "support/qasm_parser.hpp"

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code;
  std::string out;
};

CliResult run_raw(const std::string& command) {
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t k;
  while ((k = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, k);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

CliResult run_cli(const std::string& args) {
  return run_raw(std::string(QFACTOR_CLI_PATH) + " " + args + " 2>/dev/null");
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "qfactor_cli_test";
  fs::create_directories(dir);
  return dir;
}

int count_lines(const std::string& text) {
  int lines = 0;
  for (const char c : text) {
    if (c == '\n') ++lines;
  }
  return lines;
}

}  // namespace

TEST_CASE("encode --all reproduces the bundled golden table byte for byte") {
  const CliResult r = run_cli("encode --all");
  CHECK(r.code == 0);
  CHECK(r.out == read_file(fs::path(QFACTOR_GOLDEN_DIR) / "encode_all.txt"));
}

TEST_CASE("encode prints single rows and rejects invalid input") {
  const CliResult r21 = run_cli("encode 21");
  CHECK(r21.code == 0);
  CHECK(r21.out == "N=21  n=3  n_p=1  n_q=2  p=3 (p'=1)  q=7 (q'=3)  solutions: |111>\n");

  CHECK(run_cli("encode 16").code == 1);
  CHECK(run_cli("encode 17").code == 1);
  CHECK(run_cli("encode").code == 1);
  const CliResult err = run_raw(std::string(QFACTOR_CLI_PATH) + " encode 16 2>&1");
  CHECK(err.out.find("N must be odd") != std::string::npos);
}

TEST_CASE("resources tabulates both encodings") {
  const CliResult r = run_cli("resources 25");
  CHECK(r.code == 0);
  CHECK(r.out.find("cnots_qubo") != std::string::npos);
  CHECK(r.out.find(" 8 ") != std::string::npos);
  CHECK(r.out.find(" 34 ") != std::string::npos);

  const CliResult all = run_cli("resources --all");
  CHECK(all.code == 0);
  CHECK(count_lines(all.out) == 13);  // header + 12 corpus rows
}

TEST_CASE("resources --emit-qasm writes a parseable single layer") {
  const fs::path path = scratch_dir() / "layer.qasm";
  const CliResult r = run_cli("resources 25 --emit-qasm " + path.string() +
                              " --model qubo --gamma 0.37 --beta 0.21");
  CHECK(r.code == 0);
  const auto parsed = qfactor::testsupport::parse_qasm(read_file(path));
  CHECK(parsed.n == 4);
  int cx = 0, rz = 0, rx = 0;
  for (const auto& g : parsed.gates) {
    switch (g.kind) {
      case qfactor::GateKind::cnot: ++cx; break;
      case qfactor::GateKind::rz: ++rz; break;
      case qfactor::GateKind::rx: ++rx; break;
    }
  }
  CHECK(cx == 8);
  CHECK(rz == 8);
  CHECK(rx == 4);

  CHECK(run_cli("resources --all --emit-qasm -").code == 1);  // needs exactly one N
}

TEST_CASE("factor writes a deterministic result document") {
  const fs::path a = scratch_dir() / "a.json";
  const fs::path b = scratch_dir() / "b.json";
  const std::string flags = "factor 25 --model qubo --layers 3 --restarts 3 --seed 11 --out ";
  CHECK(run_cli(flags + a.string()).code == 0);
  CHECK(run_cli(flags + b.string()).code == 0);
  const std::string text = read_file(a);
  CHECK(text == read_file(b));

  const nlohmann::json doc = nlohmann::json::parse(text);
  CHECK(doc["n"] == 4);
  CHECK(doc["model"] == "qubo");
  CHECK(doc["instance"]["N"] == 25);
  CHECK(doc["instance"]["solutions"][0] == "0101");
  CHECK(doc["config"]["seed"] == 11);
  CHECK(doc["provenance"]["seed"] == 11);
  REQUIRE(doc["depths"].size() == 3);
  double prev = std::numeric_limits<double>::infinity();
  for (const auto& depth : doc["depths"]) {
    REQUIRE(depth.contains("l"));
    REQUIRE(depth.contains("c_min"));
    REQUIRE(depth.contains("gammas"));
    REQUIRE(depth.contains("betas"));
    REQUIRE(depth.contains("fidelity"));
    REQUIRE(depth.contains("confidence"));
    REQUIRE(depth.contains("populations"));
    const double c = depth["c_min"];
    CHECK(c >= 0.0);
    CHECK(c <= prev);
    prev = c;
    CHECK(depth["gammas"].size() == depth["l"].get<std::size_t>());
  }
}

TEST_CASE("factor validates flags") {
  CHECK(run_cli("factor 25 --layers 0").code == 1);
  CHECK(run_cli("factor 25 --model heisenberg").code == 1);
  CHECK(run_cli("factor").code == 1);
}

TEST_CASE("factor reports the population summary on stdout") {
  const CliResult r = run_cli("factor 25 --layers 4 --restarts 4 --seed 2 --out -");
  CHECK(r.code == 0);
  CHECK(r.out.find("populations:") != std::string::npos);
  CHECK(r.out.find("solution ranks first:") != std::string::npos);
  CHECK(r.out.find("\"depths\"") != std::string::npos);  // document on stdout via --out -
}

TEST_CASE("spectrum emits one row per basis state") {
  const CliResult r = run_cli("spectrum 119 --model qubo");
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 257);  // header + 2^8 rows
  CHECK(r.out.rfind("index,bitstring,energy,abs_normalized_energy,sorted_rank,is_solution\n",
                    0) == 0);

  const CliResult pubo = run_cli("spectrum 25 --model pubo");
  CHECK(pubo.code == 0);
  CHECK(pubo.out.find(",576,1,") != std::string::npos);
  // solution row: zero energy, zero normalized energy, flagged
  CHECK(pubo.out.find("10,0101,0,0,0,1\n") != std::string::npos);
}

TEST_CASE("sweep covers (N, model, seed) and stays in range") {
  const CliResult r = run_cli("sweep 15 21 --layers 2 --seeds 2 --restarts 2");
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "N,model,seed,c_min,fidelity,confidence,solution_rank");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::istringstream cells(line);
    std::string cell;
    std::getline(cells, cell, ',');  // N
    std::getline(cells, cell, ',');  // model
    CHECK((cell == "qubo" || cell == "pubo"));
    std::getline(cells, cell, ',');  // seed
    std::getline(cells, cell, ',');  // c_min
    CHECK(std::stod(cell) >= 0.0);
    std::getline(cells, cell, ',');  // fidelity
    CHECK(std::stod(cell) >= 0.0);
    CHECK(std::stod(cell) <= 1.0);
    std::getline(cells, cell, ',');  // confidence
    CHECK(std::stod(cell) >= 0.0);
    CHECK(std::stod(cell) <= 1.0);
    std::getline(cells, cell, ',');  // solution_rank
    CHECK(std::stoi(cell) >= 1);
  }
  CHECK(rows == 8);  // 2 N x 2 models x 2 seeds
}

TEST_CASE("factor defaults the document name") {
  const fs::path dir = scratch_dir();
  const std::string cmd = "cd " + dir.string() + " && " + std::string(QFACTOR_CLI_PATH) +
                          " factor 21 --layers 1 --restarts 1 2>/dev/null";
  CHECK(run_raw(cmd).code == 0);
  CHECK(fs::exists(dir / "run_N21_qubo.json"));
}
