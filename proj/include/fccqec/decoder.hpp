#ifndef FCCQEC_DECODER_HPP
#define FCCQEC_DECODER_HPP

#include "fccqec/code.hpp"
#include "fccqec/gf2.hpp"
#include "fccqec/lattice.hpp"

namespace fccqec {

/// Bit-vector of length n, one bit per edge/qubit.
struct ErrorPattern {
  BitVector bits;
};

struct Syndrome {
  Side side = Side::vertex;
  BitVector bits;  // over the checks of that side; popcount always even
};

struct DecodeOutcome {
  ErrorPattern correction;      // same syndrome as the input
  long long matching_cost = 0;  // total hop count of the matched pairs
};

/// MWPM decoder: defects are matched pairwise along BFS shortest paths on
/// the side's defect graph, using an exact minimum-weight perfect
/// matching; the correction is the XOR of the matched qubit paths.
/// Holds the precomputed defect graphs and stabilizer row spaces; decoding
/// is pure, so one Decoder serves concurrent trials.
class Decoder {
 public:
  explicit Decoder(const CssCode& code);

  int num_qubits() const { return n_; }

  /// H * e with H = H_Z for vertex-side errors, H_X for oct-side.
  Syndrome extract_syndrome(const ErrorPattern& e, Side side) const;

  /// Throws std::invalid_argument on an odd defect count (impossible for
  /// syndromes of real error patterns).
  DecodeOutcome decode(const Syndrome& s) const;

  /// For a residual with zero syndrome on its side: true iff it is NOT a
  /// stabilizer product, i.e. not in the row space of the opposite
  /// matrix. Throws std::invalid_argument if the syndrome is nonzero.
  bool is_logical_failure(const ErrorPattern& residual, Side side) const;

 private:
  int n_ = 0;
  BinaryMatrix h_z_, h_x_;
  DefectGraph vertex_graph_, oct_graph_;
  BinaryMatrix rowspace_z_, rowspace_x_;  // RREF bases for membership tests
};

}  // namespace fccqec

#endif
