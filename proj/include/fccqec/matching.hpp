#ifndef FCCQEC_MATCHING_HPP
#define FCCQEC_MATCHING_HPP

#include <vector>

namespace fccqec {

struct MatchingResult {
  std::vector<int> mates;  // mates[i] = j iff i and j are paired
  long long total_weight = 0;
};

/// Exact minimum-weight perfect matching on a complete graph given a
/// symmetric weight matrix (diagonal ignored). The vertex count must be
/// even. Deterministic: fixed iteration order, so ties always resolve
/// the same way for a given input.
///
/// Implemented as a primal-dual blossom search (O(V^3)); minimisation is
/// reduced to maximum-weight matching by complementing weights, which on
/// a complete graph with positive weights is always perfect.
MatchingResult min_weight_perfect_matching(const std::vector<std::vector<long long>>& weights);

}  // namespace fccqec

#endif
