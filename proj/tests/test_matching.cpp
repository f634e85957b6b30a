#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <vector>

#include "fccqec/matching.hpp"

using namespace fccqec;

namespace {

using WeightMatrix = std::vector<std::vector<long long>>;

// Brute-force oracle: enumerate all (m-1)!! perfect pairings recursively
// and return the minimum total weight.
long long brute_force_min(const WeightMatrix& w, std::vector<int>& unmatched) {
  if (unmatched.empty()) return 0;
  const int a = unmatched[0];
  long long best = -1;
  for (std::size_t i = 1; i < unmatched.size(); ++i) {
    const int b = unmatched[i];
    std::vector<int> rest;
    for (std::size_t j = 1; j < unmatched.size(); ++j)
      if (j != i) rest.push_back(unmatched[j]);
    const long long sub = w[a][b] + brute_force_min(w, rest);
    if (best < 0 || sub < best) best = sub;
  }
  return best;
}

long long brute_force_min(const WeightMatrix& w) {
  std::vector<int> all(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) all[i] = static_cast<int>(i);
  return brute_force_min(w, all);
}

WeightMatrix random_weights(int m, long long lo, long long hi, std::mt19937_64& rng) {
  WeightMatrix w(m, std::vector<long long>(m, 0));
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      w[i][j] = w[j][i] = lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
  }
  return w;
}

void check_valid_matching(const WeightMatrix& w, const MatchingResult& result) {
  const int m = static_cast<int>(w.size());
  REQUIRE(static_cast<int>(result.mates.size()) == m);
  long long total = 0;
  for (int i = 0; i < m; ++i) {
    const int j = result.mates[i];
    REQUIRE(j >= 0);
    REQUIRE(j < m);
    CHECK(j != i);
    CHECK(result.mates[j] == i);
    if (i < j) total += w[i][j];
  }
  CHECK(total == result.total_weight);
}

}  // namespace

TEST_CASE("trivial sizes") {
  const MatchingResult empty = min_weight_perfect_matching({});
  CHECK(empty.mates.empty());
  CHECK(empty.total_weight == 0);

  const WeightMatrix two = {{0, 7}, {7, 0}};
  const MatchingResult pair = min_weight_perfect_matching(two);
  CHECK(pair.mates == std::vector<int>{1, 0});
  CHECK(pair.total_weight == 7);
}

TEST_CASE("hand-checked 4-vertex instance") {
  // Pairing (0,1)+(2,3) costs 1+2=3; (0,2)+(1,3) costs 10+10=20;
  // (0,3)+(1,2) costs 10+10=20.
  const WeightMatrix w = {
      {0, 1, 10, 10},
      {1, 0, 10, 10},
      {10, 10, 0, 2},
      {10, 10, 2, 0},
  };
  const MatchingResult result = min_weight_perfect_matching(w);
  check_valid_matching(w, result);
  CHECK(result.total_weight == 3);
  CHECK(result.mates == std::vector<int>{1, 0, 3, 2});
}

TEST_CASE("greedy-trap instance requires the global optimum") {
  // Greedy picks the cheap (1,2) edge and is forced into 1+100+100=201;
  // the optimum avoids it: (0,1)+(2,3)+(4,5) = 2+2+2 = 6.
  const WeightMatrix w = {
      {0, 2, 50, 100, 100, 100},  //
      {2, 0, 1, 100, 100, 100},   //
      {50, 1, 0, 2, 100, 100},    //
      {100, 100, 2, 0, 1, 50},    //
      {100, 100, 100, 1, 0, 2},   //
      {100, 100, 100, 50, 2, 0},
  };
  const MatchingResult result = min_weight_perfect_matching(w);
  check_valid_matching(w, result);
  CHECK(result.total_weight == brute_force_min(w));
  CHECK(result.total_weight == 6);
}

TEST_CASE("differential test against the all-pairings oracle") {
  std::mt19937_64 rng(20240601);
  int instances = 0;
  for (int round = 0; round < 120; ++round) {
    for (int m : {2, 4, 6, 8, 10}) {
      // Alternate wide and narrow weight ranges; narrow ranges force
      // many ties and stress the tie-breaking paths.
      const WeightMatrix w = (round % 2 == 0) ? random_weights(m, 1, 1000, rng) : random_weights(m, 1, 6, rng);
      const MatchingResult result = min_weight_perfect_matching(w);
      check_valid_matching(w, result);
      CHECK(result.total_weight == brute_force_min(w));
      ++instances;
    }
  }
  CHECK(instances >= 500);
}

TEST_CASE("oracle agreement on larger instances, including zero weights") {
  std::mt19937_64 rng(98765);
  for (int round = 0; round < 12; ++round) {
    const WeightMatrix w = random_weights(12, 0, 14, rng);
    const MatchingResult result = min_weight_perfect_matching(w);
    check_valid_matching(w, result);
    CHECK(result.total_weight == brute_force_min(w));
  }
}

TEST_CASE("metric instances: points on a cycle") {
  // Weights = hop distance on a 16-cycle, the shape the decoder feeds in.
  const int m = 10;
  std::mt19937_64 rng(777);
  for (int round = 0; round < 40; ++round) {
    std::vector<int> position(m);
    for (int i = 0; i < m; ++i) position[i] = static_cast<int>(rng() % 16);
    WeightMatrix w(m, std::vector<long long>(m, 0));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        const int diff = std::abs(position[i] - position[j]);
        w[i][j] = std::min(diff, 16 - diff);
      }
    }
    const MatchingResult result = min_weight_perfect_matching(w);
    check_valid_matching(w, result);
    CHECK(result.total_weight == brute_force_min(w));
  }
}

TEST_CASE("all-equal weights still produce a valid perfect matching") {
  for (int m : {4, 8, 12}) {
    WeightMatrix w(m, std::vector<long long>(m, 5));
    for (int i = 0; i < m; ++i) w[i][i] = 0;
    const MatchingResult result = min_weight_perfect_matching(w);
    check_valid_matching(w, result);
    CHECK(result.total_weight == 5LL * (m / 2));
  }
}

TEST_CASE("determinism: identical input, identical mates") {
  std::mt19937_64 rng(13);
  const WeightMatrix w = random_weights(10, 1, 4, rng);
  const MatchingResult a = min_weight_perfect_matching(w);
  const MatchingResult b = min_weight_perfect_matching(w);
  CHECK(a.mates == b.mates);
  CHECK(a.total_weight == b.total_weight);
}

TEST_CASE("invalid inputs are rejected") {
  CHECK_THROWS_AS(min_weight_perfect_matching({{0}}), std::invalid_argument);  // odd count
  const WeightMatrix odd3 = {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  CHECK_THROWS_AS(min_weight_perfect_matching(odd3), std::invalid_argument);
  const WeightMatrix ragged = {{0, 1}, {1}};
  CHECK_THROWS_AS(min_weight_perfect_matching(ragged), std::invalid_argument);
  const WeightMatrix asym = {{0, 1}, {2, 0}};
  CHECK_THROWS_AS(min_weight_perfect_matching(asym), std::invalid_argument);
}
