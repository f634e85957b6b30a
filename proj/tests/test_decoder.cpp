#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "fccqec/decoder.hpp"
#include "fccqec/distance.hpp"

using namespace fccqec;

namespace {

ErrorPattern single_qubit(int n, int q) {
  ErrorPattern e;
  e.bits = BitVector(n);
  e.bits.set(q);
  return e;
}

ErrorPattern random_error(int n, double p, std::mt19937_64& rng) {
  ErrorPattern e;
  e.bits = BitVector(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) e.bits.set(i);
  }
  return e;
}

}  // namespace

TEST_CASE("syndrome of a single-qubit error lights exactly the two checks") {
  const CssCode code = build_code(FccLattice(4));
  const Decoder decoder(code);
  const FccLattice& lat = code.lattice;
  for (int q = 0; q < code.n; ++q) {
    const ErrorPattern e = single_qubit(code.n, q);

    const Syndrome sv = decoder.extract_syndrome(e, Side::vertex);
    CHECK(sv.side == Side::vertex);
    CHECK(sv.bits.weight() == 2);
    CHECK(sv.bits.get(lat.edges()[q].first));
    CHECK(sv.bits.get(lat.edges()[q].second));

    const Syndrome so = decoder.extract_syndrome(e, Side::oct);
    CHECK(so.bits.weight() == 2);
    CHECK(so.bits.get(lat.edge_octs()[q][0]));
    CHECK(so.bits.get(lat.edge_octs()[q][1]));
  }
}

TEST_CASE("a zero syndrome decodes to the zero correction") {
  const CssCode code = build_code(FccLattice(4));
  const Decoder decoder(code);
  for (Side side : {Side::vertex, Side::oct}) {
    Syndrome s;
    s.side = side;
    s.bits = BitVector(32);
    const DecodeOutcome out = decoder.decode(s);
    CHECK(out.correction.bits.is_zero());
    CHECK(out.matching_cost == 0);
  }
}

TEST_CASE("every single-qubit error is corrected exactly at L=4") {
  const CssCode code = build_code(FccLattice(4));
  const Decoder decoder(code);
  for (Side side : {Side::vertex, Side::oct}) {
    for (int q = 0; q < code.n; ++q) {
      const ErrorPattern e = single_qubit(code.n, q);
      const DecodeOutcome out = decoder.decode(decoder.extract_syndrome(e, side));
      ErrorPattern residual;
      residual.bits = e.bits;
      residual.bits.xor_with(out.correction.bits);
      CHECK(!decoder.is_logical_failure(residual, side));
      // Two adjacent defects admit a distance-1 pairing.
      CHECK(out.matching_cost == 1);
      CHECK(out.correction.bits == e.bits);  // the unique weight-1 fix
    }
  }
}

TEST_CASE("decoded corrections reproduce the syndrome on random errors") {
  const CssCode code = build_code(FccLattice(4));
  const Decoder decoder(code);
  std::mt19937_64 rng(909090);
  for (Side side : {Side::vertex, Side::oct}) {
    for (double p : {0.01, 0.03, 0.08}) {
      for (int trial = 0; trial < 120; ++trial) {
        const ErrorPattern e = random_error(code.n, p, rng);
        const Syndrome s = decoder.extract_syndrome(e, side);
        // decode() self-checks the reproduced syndrome and throws on
        // mismatch, so reaching the residual test is already a pass.
        const DecodeOutcome out = decoder.decode(s);
        CHECK(decoder.extract_syndrome(out.correction, side).bits == s.bits);
        ErrorPattern residual;
        residual.bits = e.bits;
        residual.bits.xor_with(out.correction.bits);
        CHECK(decoder.extract_syndrome(residual, side).bits.is_zero());
        // The matched pairing can never beat the pairing induced by the
        // true error itself.
        CHECK(out.matching_cost <= e.bits.weight());
      }
    }
  }
}

TEST_CASE("matching cost on random defect sets equals the brute-force pairing minimum") {
  const CssCode code = build_code(FccLattice(4));
  const Decoder decoder(code);
  const FccLattice& lat = code.lattice;

  // All-pairs BFS distances for the oracle, per side.
  auto all_distances = [&](Side side) {
    const DefectGraph g = build_defect_graph(lat, side);
    std::vector<std::vector<int>> dist;
    for (int i = 0; i < g.node_count; ++i) dist.push_back(bfs_from(g, i).distance);
    return dist;
  };
  const std::vector<std::vector<int>> dist_vertex = all_distances(Side::vertex);
  const std::vector<std::vector<int>> dist_oct = all_distances(Side::oct);

  // Oracle: minimum over all (m-1)!! pairings of the defect set.
  auto brute_force = [](const std::vector<std::vector<int>>& dist, std::vector<int> defects) {
    auto rec = [&](auto&& self, std::vector<int>& open) -> long long {
      if (open.empty()) return 0;
      const int a = open[0];
      long long best = -1;
      for (std::size_t i = 1; i < open.size(); ++i) {
        std::vector<int> rest;
        for (std::size_t j = 1; j < open.size(); ++j)
          if (j != i) rest.push_back(open[j]);
        const long long sub = dist[a][open[i]] + self(self, rest);
        if (best < 0 || sub < best) best = sub;
      }
      return best;
    };
    return rec(rec, defects);
  };

  std::mt19937_64 rng(112233);
  for (Side side : {Side::vertex, Side::oct}) {
    const auto& dist = (side == Side::vertex) ? dist_vertex : dist_oct;
    const int checks = static_cast<int>(dist.size());
    for (int trial = 0; trial < 60; ++trial) {
      const int m = 4 + 2 * static_cast<int>(rng() % 4);  // 4, 6, 8, or 10 defects
      std::vector<int> defects;
      while (static_cast<int>(defects.size()) < m) {
        const int c = static_cast<int>(rng() % checks);
        if (std::find(defects.begin(), defects.end(), c) == defects.end()) defects.push_back(c);
      }
      Syndrome s;
      s.side = side;
      s.bits = BitVector(checks);
      for (int c : defects) s.bits.set(c);
      const DecodeOutcome out = decoder.decode(s);
      CHECK(out.matching_cost == brute_force(dist, defects));
      CHECK(decoder.extract_syndrome(out.correction, side).bits == s.bits);
    }
  }
}

TEST_CASE("weight-3 logical residuals are flagged as failures") {
  const CssCode code = build_code(FccLattice(4));
  const Decoder decoder(code);
  // Kernel basis rows of H_Z with weight 3 are logical on the vertex
  // side; same for H_X on the oct side.
  struct Case {
    const BinaryMatrix* h_check;
    Side side;
    int expected;
  };
  const std::vector<Case> cases = {{&code.h_z, Side::vertex, 34}, {&code.h_x, Side::oct, 12}};
  for (const auto& [h_check, side, expected] : cases) {
    const BinaryMatrix ker = kernel_basis(*h_check);
    int flagged = 0;
    for (int r = 0; r < ker.rows(); ++r) {
      if (ker.row_weight(r) != 3) continue;
      ErrorPattern residual;
      residual.bits = ker.row(r);
      if (decoder.is_logical_failure(residual, side)) ++flagged;
    }
    CHECK(flagged == expected);
  }
}

TEST_CASE("stabilizer residuals are not failures") {
  const CssCode code = build_code(FccLattice(4));
  const Decoder decoder(code);
  std::mt19937_64 rng(4242);
  // Random products of H_X rows are trivial residuals on the vertex side.
  for (int trial = 0; trial < 50; ++trial) {
    ErrorPattern residual;
    residual.bits = BitVector(code.n);
    for (int r = 0; r < code.h_x.rows(); ++r) {
      if (rng() & 1) residual.bits.xor_with(code.h_x.row(r));
    }
    CHECK(!decoder.is_logical_failure(residual, Side::vertex));
  }
  // And H_Z products on the oct side.
  for (int trial = 0; trial < 50; ++trial) {
    ErrorPattern residual;
    residual.bits = BitVector(code.n);
    for (int r = 0; r < code.h_z.rows(); ++r) {
      if (rng() & 1) residual.bits.xor_with(code.h_z.row(r));
    }
    CHECK(!decoder.is_logical_failure(residual, Side::oct));
  }
}

TEST_CASE("the all-ones error commutes with every check") {
  // Each check has weight 12, so the all-ones pattern has zero syndrome
  // on both sides at any L.
  const CssCode code = build_code(FccLattice(4));
  const Decoder decoder(code);
  ErrorPattern all_ones;
  all_ones.bits = BitVector(code.n);
  for (int i = 0; i < code.n; ++i) all_ones.bits.set(i);
  for (Side side : {Side::vertex, Side::oct}) {
    const Syndrome s = decoder.extract_syndrome(all_ones, side);
    CHECK(s.bits.is_zero());
    const DecodeOutcome out = decoder.decode(s);
    CHECK(out.correction.bits.is_zero());
  }
}

TEST_CASE("invalid inputs are rejected") {
  const CssCode code = build_code(FccLattice(4));
  const Decoder decoder(code);

  Syndrome odd;
  odd.side = Side::vertex;
  odd.bits = BitVector(32);
  odd.bits.set(5);
  CHECK_THROWS_AS(decoder.decode(odd), std::invalid_argument);

  Syndrome wrong_length;
  wrong_length.side = Side::vertex;
  wrong_length.bits = BitVector(31);
  CHECK_THROWS_AS(decoder.decode(wrong_length), std::invalid_argument);

  // A residual with nonzero syndrome cannot be classified.
  const ErrorPattern e = single_qubit(code.n, 0);
  CHECK_THROWS_AS(decoder.is_logical_failure(e, Side::vertex), std::invalid_argument);
}

TEST_CASE("decoding works at L=6 as well") {
  const CssCode code = build_code(FccLattice(6));
  const Decoder decoder(code);
  std::mt19937_64 rng(6);
  for (Side side : {Side::vertex, Side::oct}) {
    for (int trial = 0; trial < 25; ++trial) {
      const ErrorPattern e = random_error(code.n, 0.01, rng);
      const DecodeOutcome out = decoder.decode(decoder.extract_syndrome(e, side));
      ErrorPattern residual;
      residual.bits = e.bits;
      residual.bits.xor_with(out.correction.bits);
      CHECK(decoder.extract_syndrome(residual, side).bits.is_zero());
    }
  }
}
