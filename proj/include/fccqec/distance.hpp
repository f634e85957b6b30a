#ifndef FCCQEC_DISTANCE_HPP
#define FCCQEC_DISTANCE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "fccqec/code.hpp"
#include "fccqec/gf2.hpp"

namespace fccqec {

struct LowWeightCheck {
  std::int64_t weight1_kernel_count = 0;  // all-zero columns
  std::int64_t weight2_kernel_count = 0;  // identical column pairs
  std::int64_t pairs_checked = 0;         // C(cols, 2)
};

/// Exhaustive weight-1/weight-2 kernel search: a weight-1 vector e_i lies
/// in ker(h) iff column i is zero; a weight-2 vector e_i + e_j lies in
/// ker(h) iff columns i and j are identical. Duplicate columns are found
/// by grouping packed column patterns; the result equals the literal
/// C(n,2) double loop.
LowWeightCheck exhaustive_low_weight_check(const BinaryMatrix& h);

/// Among the deterministic kernel basis rows of h_check, the number of
/// weight-3 rows outside row_space(h_other). Basis-dependent count; it is
/// reproducible only under the fixed rref elimination order.
int weight3_logicals(const BinaryMatrix& h_check, const BinaryMatrix& h_other);

/// Hamming-weight histogram of the deterministic kernel basis rows.
std::map<int, std::int64_t> kernel_weight_histogram(const BinaryMatrix& h);

/// Basis-independent count of ALL weight-3 vectors in
/// ker(h_check) \ row_space(h_other), i.e. every triple i<j<k whose
/// columns XOR to zero, filtered by coset membership. Full C(n,3) sweep
/// semantics, implemented by pair enumeration with column-pattern lookup.
std::int64_t full_weight3_logicals(const BinaryMatrix& h_check, const BinaryMatrix& h_other);

struct DistanceReport {
  Side side = Side::vertex;  // vertex: h_check = H_Z; oct: h_check = H_X
  std::int64_t weight1_kernel_count = 0;
  std::int64_t weight2_kernel_count = 0;
  std::int64_t pairs_checked = 0;
  int weight3_logical_count = 0;
  std::map<int, std::int64_t> kernel_weight_histogram;
  std::optional<int> lower_bound;  // 3 iff weight1 = weight2 = 0
  std::optional<int> upper_bound;  // 3 iff weight3_logical_count > 0
};

struct DistanceProof {
  DistanceReport z_report;  // ker(H_Z) \ rowspace(H_X)
  DistanceReport x_report;  // ker(H_X) \ rowspace(H_Z)
  std::optional<int> d_z;
  std::optional<int> d_x;
  std::optional<int> d;  // min(d_z, d_x); set only when both sides proved
  bool proven = false;
  std::string failure;  // what failed, when not proven
};

/// Proves d = 3 exactly: weight-<=2 elimination (lower bound) and
/// constructive weight-3 logicals (upper bound) on both sides.
DistanceProof prove_distance(const CssCode& code);

}  // namespace fccqec

#endif
