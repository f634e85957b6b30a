#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <map>
#include <vector>

#include "fccqec/distance.hpp"

using namespace fccqec;

namespace {

// Literal quadratic reference for the weight-<=2 search: compare every
// column pair directly.
LowWeightCheck literal_low_weight_check(const BinaryMatrix& h) {
  LowWeightCheck out;
  std::vector<BitVector> cols;
  cols.reserve(h.cols());
  for (int c = 0; c < h.cols(); ++c) cols.push_back(h.column(c));
  for (int c = 0; c < h.cols(); ++c)
    if (cols[c].is_zero()) ++out.weight1_kernel_count;
  for (int i = 0; i < h.cols(); ++i) {
    for (int j = i + 1; j < h.cols(); ++j) {
      ++out.pairs_checked;
      if (cols[i] == cols[j]) ++out.weight2_kernel_count;
    }
  }
  return out;
}

// Literal cubic reference for the full weight-3 sweep: every column
// triple whose XOR vanishes, filtered by stabilizer membership.
std::int64_t literal_full_weight3(const BinaryMatrix& h_check, const BinaryMatrix& h_other) {
  REQUIRE(h_check.rows() <= 64);
  std::vector<std::uint64_t> cols(h_check.cols(), 0);
  for (int r = 0; r < h_check.rows(); ++r)
    for (int c = 0; c < h_check.cols(); ++c)
      if (h_check.get(r, c)) cols[c] |= std::uint64_t{1} << r;
  const BinaryMatrix stab = row_space(h_other);
  std::int64_t count = 0;
  for (int i = 0; i < h_check.cols(); ++i) {
    for (int j = i + 1; j < h_check.cols(); ++j) {
      const std::uint64_t ij = cols[i] ^ cols[j];
      for (int k = j + 1; k < h_check.cols(); ++k) {
        if ((ij ^ cols[k]) != 0) continue;
        BitVector v(h_check.cols());
        v.set(i);
        v.set(j);
        v.set(k);
        if (!in_row_space(stab, v)) ++count;
      }
    }
  }
  return count;
}

}  // namespace

TEST_CASE("no weight-1 or weight-2 kernel vectors at L=4 (18336 pairs/side)") {
  const CssCode code = build_code(FccLattice(4));
  for (const BinaryMatrix* h : {&code.h_z, &code.h_x}) {
    const LowWeightCheck check = exhaustive_low_weight_check(*h);
    CHECK(check.weight1_kernel_count == 0);
    CHECK(check.weight2_kernel_count == 0);
    CHECK(check.pairs_checked == 18336);
  }
}

TEST_CASE("no weight-1 or weight-2 kernel vectors at L=6 (209628 pairs/side)") {
  const CssCode code = build_code(FccLattice(6));
  for (const BinaryMatrix* h : {&code.h_z, &code.h_x}) {
    const LowWeightCheck check = exhaustive_low_weight_check(*h);
    CHECK(check.weight1_kernel_count == 0);
    CHECK(check.weight2_kernel_count == 0);
    CHECK(check.pairs_checked == 209628);
  }
}

TEST_CASE("grouped column search equals the literal pair loop") {
  const CssCode code = build_code(FccLattice(4));
  for (const BinaryMatrix* h : {&code.h_z, &code.h_x}) {
    const LowWeightCheck fast = exhaustive_low_weight_check(*h);
    const LowWeightCheck slow = literal_low_weight_check(*h);
    CHECK(fast.weight1_kernel_count == slow.weight1_kernel_count);
    CHECK(fast.weight2_kernel_count == slow.weight2_kernel_count);
    CHECK(fast.pairs_checked == slow.pairs_checked);
  }
  // Sanity on a matrix that does have low-weight kernel vectors.
  const BinaryMatrix degenerate = BinaryMatrix::from_rows({{1, 1, 0, 0}, {0, 0, 1, 0}});
  const LowWeightCheck check = exhaustive_low_weight_check(degenerate);
  CHECK(check.weight1_kernel_count == 1);  // zero column 3
  CHECK(check.weight2_kernel_count == 1);  // columns 0 and 1 identical
  CHECK(check.pairs_checked == 6);
  const LowWeightCheck literal = literal_low_weight_check(degenerate);
  CHECK(literal.weight1_kernel_count == 1);
  CHECK(literal.weight2_kernel_count == 1);
}

TEST_CASE("weight-3 kernel basis logicals at L=4: 34 and 12") {
  const CssCode code = build_code(FccLattice(4));
  CHECK(weight3_logicals(code.h_z, code.h_x) == 34);
  CHECK(weight3_logicals(code.h_x, code.h_z) == 12);
}

TEST_CASE("kernel weight histograms at L=4 under the fixed elimination order") {
  const CssCode code = build_code(FccLattice(4));
  const std::map<int, std::int64_t> expected_z = {{3, 34}, {4, 61}, {5, 40}, {6, 20}, {7, 6}};
  CHECK(kernel_weight_histogram(code.h_z) == expected_z);
  const std::map<int, std::int64_t> expected_x = {{3, 12}, {4, 54}, {5, 28}, {6, 32}, {7, 20}, {8, 10}, {9, 4}, {10, 1}};
  CHECK(kernel_weight_histogram(code.h_x) == expected_x);
  // Both histograms cover the full kernel basis: n - rank = 161 rows.
  for (const auto& hist : {expected_z, expected_x}) {
    std::int64_t total = 0;
    for (const auto& [weight, count] : hist) total += count;
    CHECK(total == 161);
  }
}

TEST_CASE("basis-independent weight-3 count at L=4 is 256 per side") {
  const CssCode code = build_code(FccLattice(4));
  CHECK(full_weight3_logicals(code.h_z, code.h_x) == 256);
  CHECK(full_weight3_logicals(code.h_x, code.h_z) == 256);
}

TEST_CASE("pair-enumeration weight-3 sweep equals the literal triple loop") {
  const CssCode code = build_code(FccLattice(4));
  CHECK(full_weight3_logicals(code.h_z, code.h_x) == literal_full_weight3(code.h_z, code.h_x));
  CHECK(full_weight3_logicals(code.h_x, code.h_z) == literal_full_weight3(code.h_x, code.h_z));
}

TEST_CASE("distance proof: d = 3 at L=4") {
  const CssCode code = build_code(FccLattice(4));
  const DistanceProof proof = prove_distance(code);
  CHECK(proof.proven);
  CHECK(proof.failure.empty());
  REQUIRE(proof.d.has_value());
  CHECK(*proof.d == 3);
  CHECK(*proof.d_z == 3);
  CHECK(*proof.d_x == 3);
  CHECK(proof.z_report.side == Side::vertex);
  CHECK(proof.x_report.side == Side::oct);
  CHECK(proof.z_report.weight3_logical_count == 34);
  CHECK(proof.x_report.weight3_logical_count == 12);
  CHECK(proof.z_report.pairs_checked == 18336);
  CHECK(*proof.z_report.lower_bound == 3);
  CHECK(*proof.z_report.upper_bound == 3);
}

TEST_CASE("distance proof: d = 3 at L=6") {
  const CssCode code = build_code(FccLattice(6));
  const DistanceProof proof = prove_distance(code);
  CHECK(proof.proven);
  REQUIRE(proof.d.has_value());
  CHECK(*proof.d == 3);
  CHECK(proof.z_report.pairs_checked == 209628);
  CHECK(proof.x_report.pairs_checked == 209628);
  // The histograms are fixed by the elimination order; at minimum no
  // kernel basis row may have weight below the proven distance.
  CHECK(proof.z_report.kernel_weight_histogram.begin()->first >= 3);
  CHECK(proof.x_report.kernel_weight_histogram.begin()->first >= 3);
  CHECK(proof.z_report.weight3_logical_count > 0);
  CHECK(proof.x_report.weight3_logical_count > 0);
}

TEST_CASE("kernel basis weight-3 rows are all logical (stabilizers have even weight)") {
  const CssCode code = build_code(FccLattice(4));
  // Every stabilizer is a sum of weight-12 rows, hence even weight; an
  // odd-weight kernel vector can never be a stabilizer. The histogram's
  // weight-3 bucket must therefore equal the logical count.
  const auto hist_z = kernel_weight_histogram(code.h_z);
  CHECK(hist_z.at(3) == weight3_logicals(code.h_z, code.h_x));
  const auto hist_x = kernel_weight_histogram(code.h_x);
  CHECK(hist_x.at(3) == weight3_logicals(code.h_x, code.h_z));
}
