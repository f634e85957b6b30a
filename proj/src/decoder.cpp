#include "fccqec/decoder.hpp"

#include <stdexcept>
#include <vector>

#include "fccqec/matching.hpp"

namespace fccqec {

Decoder::Decoder(const CssCode& code)
    : n_(code.n),
      h_z_(code.h_z),
      h_x_(code.h_x),
      vertex_graph_(build_defect_graph(code.lattice, Side::vertex)),
      oct_graph_(build_defect_graph(code.lattice, Side::oct)),
      rowspace_z_(row_space(code.h_z)),
      rowspace_x_(row_space(code.h_x)) {}

Syndrome Decoder::extract_syndrome(const ErrorPattern& e, Side side) const {
  const BinaryMatrix& h = side == Side::vertex ? h_z_ : h_x_;
  return {side, mat_vec_mod2(h, e.bits)};
}

DecodeOutcome Decoder::decode(const Syndrome& s) const {
  const DefectGraph& graph = s.side == Side::vertex ? vertex_graph_ : oct_graph_;
  if (s.bits.size() != graph.node_count) throw std::invalid_argument("decode: syndrome length mismatch");

  std::vector<int> defects;
  for (int c = 0; c < s.bits.size(); ++c)
    if (s.bits.get(c)) defects.push_back(c);
  const int m = static_cast<int>(defects.size());
  if (m % 2 != 0) throw std::invalid_argument("decode: odd defect count; syndrome is not realisable");

  DecodeOutcome out;
  out.correction.bits = BitVector(n_);
  if (m == 0) return out;

  // One BFS per defect gives all pairwise distances plus path recovery.
  std::vector<BfsTree> trees;
  trees.reserve(m);
  for (int d : defects) trees.push_back(bfs_from(graph, d));

  std::vector<std::vector<long long>> w(m, std::vector<long long>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) {
        const int dist = trees[i].distance[defects[j]];
        if (dist < 0) throw std::runtime_error("decode: defect graph is disconnected");
        w[i][j] = dist;
      }

  const MatchingResult matching = min_weight_perfect_matching(w);
  out.matching_cost = matching.total_weight;
  for (int i = 0; i < m; ++i) {
    if (matching.mates[i] < i) continue;
    for (int q : path_from_tree(trees[i], defects[matching.mates[i]])) out.correction.bits.flip(q);
  }

  // The XOR of defect-pair paths reproduces the defect set exactly; a
  // mismatch here means internal corruption.
  if (!(extract_syndrome(out.correction, s.side).bits == s.bits))
    throw std::logic_error("decode: correction does not reproduce the syndrome");
  return out;
}

bool Decoder::is_logical_failure(const ErrorPattern& residual, Side side) const {
  if (!extract_syndrome(residual, side).bits.is_zero())
    throw std::invalid_argument("is_logical_failure: residual has nonzero syndrome");
  const BinaryMatrix& opposite = side == Side::vertex ? rowspace_x_ : rowspace_z_;
  return !in_row_space(opposite, residual.bits);
}

}  // namespace fccqec
