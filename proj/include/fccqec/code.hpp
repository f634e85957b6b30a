#ifndef FCCQEC_CODE_HPP
#define FCCQEC_CODE_HPP

#include <iosfwd>
#include <utility>

#include "fccqec/gf2.hpp"
#include "fccqec/lattice.hpp"

namespace fccqec {

/// CSS code on the FCC lattice: vertex checks H_Z (row v has a 1 at every
/// edge incident to node v) and oct checks H_X (row o has a 1 at every
/// edge with both endpoints among oct o's 6 nodes). Row/column order
/// follows the lattice enumeration. Immutable after build_code.
struct CssCode {
  FccLattice lattice;
  BinaryMatrix h_z;  // num_nodes x num_edges
  BinaryMatrix h_x;  // num_octs  x num_edges
  int n = 0;         // physical qubits = edges
  int rank_z = 0;
  int rank_x = 0;
  int k = 0;  // n - rank_z - rank_x
  double rate = 0.0;
};

/// Assembles the code and checks every structural claim: matrix shapes,
/// all row weights 12, all column weights 2, H_X * H_Z^T = 0, and
/// k = 2L^3 + 2. Throws std::runtime_error naming the violated claim.
CssCode build_code(FccLattice lat);

/// Structured re-check of the code's parameter claims. Failures are
/// reported, never thrown.
struct VerificationReport {
  int L = 0;
  int n = 0;
  bool css_valid = false;  // H_X * H_Z^T == 0
  int min_row_weight_z = 0, max_row_weight_z = 0;
  int min_row_weight_x = 0, max_row_weight_x = 0;
  int min_col_weight_z = 0, max_col_weight_z = 0;
  int min_col_weight_x = 0, max_col_weight_x = 0;
  int rank_z = 0, rank_x = 0;
  int k = 0;
  double rate = 0.0;
  int predicted_k = 0;  // 2L^3 + 2
  bool k_matches_prediction = false;

  bool all_claims_hold() const {
    return css_valid && min_row_weight_z == 12 && max_row_weight_z == 12 && min_row_weight_x == 12 &&
           max_row_weight_x == 12 && min_col_weight_z == 2 && max_col_weight_z == 2 && min_col_weight_x == 2 &&
           max_col_weight_x == 2 && k_matches_prediction;
  }
};

VerificationReport verify_css(const CssCode& code);

/// Whether the all-ones combination of rows is zero on each side, i.e.
/// the single global rank deficiency rank = rows - 1 holds exactly.
/// Returns (z_global, x_global).
std::pair<bool, bool> rank_deficiency_check(const CssCode& code);

/// Sparse text export, one line per row: row index then the sorted column
/// indices of its 1s.
void write_sparse_text(std::ostream& os, const BinaryMatrix& m);
BinaryMatrix read_sparse_text(std::istream& is, int rows, int cols);

}  // namespace fccqec

#endif
