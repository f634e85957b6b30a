#ifndef FCCQEC_MONTECARLO_HPP
#define FCCQEC_MONTECARLO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fccqec/code.hpp"
#include "fccqec/decoder.hpp"

namespace fccqec {

/// splitmix64 finalizer; the mixing function behind per-trial streams.
std::uint64_t mix64(std::uint64_t x);

/// Small counter-based PRNG (splitmix64). One independent instance per
/// trial keeps results identical for any worker count.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }
  /// Uniform in [0, 1), 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Stream seed for one trial: two finalizer rounds over
/// (master_seed, p_index, trial_index). Documented so results can be
/// reproduced independently of execution order.
std::uint64_t trial_stream_seed(std::uint64_t master_seed, std::uint64_t p_index, std::uint64_t trial_index);

/// i.i.d. noise: each qubit flips with probability p, both sides sampled
/// independently at the same p.
struct NoiseModel {
  double p = 0.0;
};

/// One correction round: sample a fresh error per side, decode it on that
/// side, test the residual. Consumes exactly 2n draws from rng (vertex
/// side first).
std::pair<bool, bool> run_trial(const Decoder& decoder, double p, SplitMix64& rng);

struct TrialStats {
  int L = 0;
  double p = 0.0;
  std::int64_t trials = 0;
  std::int64_t block_failures = 0;  // either side failed
  std::int64_t vertex_side_failures = 0;
  std::int64_t oct_side_failures = 0;
  double p_l = 0.0;
  double ci_low = 0.0, ci_high = 0.0;  // Wilson 95%
  double bare_rate = 0.0;              // 1 - (1-p)^k
  std::optional<double> coding_gain;   // bare_rate / p_l; unset when no failures
  double gain_lower_bound = 0.0;       // bare_rate / ci_high, the one-sided bound
  double wall_seconds = 0.0;
};

/// Probability that at least one of k unprotected qubits flips.
double bare_block_rate(double p, int k);

/// Wilson 95% score interval for failures/trials.
std::pair<double, double> wilson_interval(std::int64_t failures, std::int64_t trials);

/// Seeded Monte Carlo over a probability grid. Per-trial streams are
/// derived from (master_seed, p index, trial index), and aggregation is
/// plain counting, so the result is bit-identical for any worker count.
/// workers <= 0 picks the hardware concurrency.
std::vector<TrialStats> run_experiment(const CssCode& code, const std::vector<double>& p_list, std::int64_t trials,
                                       std::uint64_t master_seed, int workers = 0);

/// CSV with header L,p,trials,failures,p_L,ci_low,ci_high,bare_rate,gain,
/// wall_time and 6-significant-digit floats. With include_timing false the
/// wall_time column is written as 0 so repeated runs are byte-identical.
std::string to_csv(const std::vector<TrialStats>& stats, bool include_timing = false);

}  // namespace fccqec

#endif
