#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "qfactor/instance.hpp"

using namespace qfactor;

namespace {

struct TableRow {
  std::uint64_t N;
  int n;
  std::uint64_t p, p_prime, q, q_prime;
  int n_p, n_q;
  std::vector<std::string> outputs;
};

// The register-table ground truth, transcribed by hand.
const std::vector<TableRow> kTable = {
    {15, 3, 3, 1, 5, 2, 1, 2, {"101"}},
    {21, 3, 3, 1, 7, 3, 1, 2, {"111"}},
    {25, 4, 5, 2, 5, 2, 2, 2, {"0101"}},
    {35, 5, 5, 2, 7, 3, 2, 3, {"01110", "11010"}},
    {39, 5, 3, 1, 13, 6, 2, 3, {"10011"}},
    {51, 6, 3, 1, 17, 8, 2, 4, {"100001"}},
    {77, 6, 7, 3, 11, 5, 2, 4, {"111010"}},
    {87, 7, 3, 1, 29, 14, 3, 4, {"1000111"}},
    {95, 7, 5, 2, 19, 9, 3, 4, {"0101001"}},
    {115, 8, 5, 2, 23, 11, 3, 5, {"01011010"}},
    {119, 8, 7, 3, 17, 8, 3, 5, {"11000010"}},
    {143, 8, 11, 5, 13, 6, 3, 5, {"10101100", "01110100"}},
};

}  // namespace

TEST_CASE("qubit sizing matches the register table") {
  for (const TableRow& row : kTable) {
    CAPTURE(row.N);
    const QubitSizing s = qubit_sizing(row.N);
    CHECK(s.n_p == row.n_p);
    CHECK(s.n_q == row.n_q);
  }
}

TEST_CASE("sizing discriminator cases") {
  // 115: largest odd <= floor(sqrt(115)) = 9 -> n_p = ceil(log2 9) - 1 = 3
  CHECK(qubit_sizing(115).n_p == 3);
  CHECK(qubit_sizing(115).n_q == 5);
  // 25: floor(25/3) = 8 is a power of two; ceil(log2 8) = 3 forces n_q = 2
  CHECK(qubit_sizing(25).n_q == 2);
}

TEST_CASE("sizing rejects invalid N") {
  CHECK_THROWS_WITH_AS(qubit_sizing(16), "N must be odd", std::invalid_argument);
  CHECK_THROWS_WITH_AS(qubit_sizing(17), "N must not be prime", std::invalid_argument);
  CHECK_THROWS_WITH_AS(qubit_sizing(9), "N must be >= 15", std::invalid_argument);
  CHECK_THROWS_AS(Instance::make(16), std::invalid_argument);
}

TEST_CASE("decode_state reads both registers") {
  CHECK(decode_state(10, 2, 2) == std::pair<std::uint64_t, std::uint64_t>{5, 5});
  CHECK(decode_state(0, 2, 2) == std::pair<std::uint64_t, std::uint64_t>{1, 1});
  CHECK(decode_state(14, 2, 3) == std::pair<std::uint64_t, std::uint64_t>{5, 7});
  CHECK(decode_state(11, 2, 3) == std::pair<std::uint64_t, std::uint64_t>{7, 5});
  CHECK_THROWS_AS(decode_state(1u << 4, Instance::make(25)), std::invalid_argument);
}

TEST_CASE("decoded factors are odd and in range") {
  for (const TableRow& row : kTable) {
    const Instance inst = Instance::make(row.N);
    for (std::uint32_t b = 0; b < inst.dim(); ++b) {
      const auto [p, q] = decode_state(b, inst);
      CHECK(p % 2 == 1);
      CHECK(q % 2 == 1);
      CHECK(p <= (std::uint64_t{1} << (inst.n_p + 1)) - 1);
      CHECK(q <= (std::uint64_t{1} << (inst.n_q + 1)) - 1);
    }
  }
}

TEST_CASE("solution sets match the register table") {
  for (const TableRow& row : kTable) {
    CAPTURE(row.N);
    const Instance inst = Instance::make(row.N);
    CHECK(inst.n == row.n);

    std::set<std::string> expected(row.outputs.begin(), row.outputs.end());
    std::set<std::string> got;
    for (const std::uint32_t b : inst.solutions) {
      got.insert(bitstring(b, inst.n));
      const auto [p, q] = decode_state(b, inst);
      CHECK(p * q == row.N);
      const bool table_order = (p == row.p && q == row.q) || (p == row.q && q == row.p);
      CHECK(table_order);
    }
    CHECK(got == expected);

    const auto [p, q] = canonical_factors(inst);
    CHECK(p == row.p);
    CHECK(q == row.q);
    CHECK((p - 1) / 2 == row.p_prime);
    CHECK((q - 1) / 2 == row.q_prime);
  }
}

TEST_CASE("solutions_by_factor lists the table order") {
  const Instance inst35 = Instance::make(35);
  const auto by_factor35 = solutions_by_factor(inst35);
  REQUIRE(by_factor35.size() == 2);
  CHECK(bitstring(by_factor35[0], 5) == "01110");
  CHECK(bitstring(by_factor35[1], 5) == "11010");

  const Instance inst143 = Instance::make(143);
  const auto by_factor143 = solutions_by_factor(inst143);
  REQUIRE(by_factor143.size() == 2);
  CHECK(bitstring(by_factor143[0], 8) == "10101100");
  CHECK(bitstring(by_factor143[1], 8) == "01110100");
}

TEST_CASE("bitstring round-trips") {
  CHECK(bitstring(10, 4) == "0101");
  CHECK(bitstring(0, 3) == "000");
  CHECK(bitstring(11, 5) == "11010");
  for (int n : {1, 3, 8}) {
    for (std::uint32_t b = 0; b < (1u << n); ++b) {
      CHECK(parse_bitstring(bitstring(b, n)) == b);
    }
  }
  CHECK_THROWS_AS(bitstring(8, 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_bitstring("01x"), std::invalid_argument);
}

TEST_CASE("corpus covers the table") {
  const auto& corpus = semiprime_corpus();
  REQUIRE(corpus.size() == kTable.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) CHECK(corpus[i] == kTable[i].N);
  CHECK(std::is_sorted(corpus.begin(), corpus.end()));
}
