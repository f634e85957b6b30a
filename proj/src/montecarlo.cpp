#include "fccqec/montecarlo.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

namespace fccqec {

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

std::uint64_t trial_stream_seed(std::uint64_t master_seed, std::uint64_t p_index, std::uint64_t trial_index) {
  std::uint64_t x = mix64(master_seed ^ (0x9e3779b97f4a7c15ULL * (p_index + 1)));
  return mix64(x ^ (0xbf58476d1ce4e5b9ULL * (trial_index + 1)));
}

namespace {

// Fixed consumption order: one draw per qubit, bit i set iff u < p.
ErrorPattern sample_error(int n, double p, SplitMix64& rng) {
  ErrorPattern e;
  e.bits = BitVector(n);
  for (int i = 0; i < n; ++i) {
    if (rng.next_unit() < p) e.bits.set(i, true);
  }
  return e;
}

bool decode_side_fails(const Decoder& decoder, const ErrorPattern& error, Side side) {
  const Syndrome s = decoder.extract_syndrome(error, side);
  const DecodeOutcome out = decoder.decode(s);
  ErrorPattern residual;
  residual.bits = error.bits;
  residual.bits.xor_with(out.correction.bits);
  return decoder.is_logical_failure(residual, side);
}

}  // namespace

std::pair<bool, bool> run_trial(const Decoder& decoder, double p, SplitMix64& rng) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("flip probability must lie in [0, 1]");
  const int n = decoder.num_qubits();
  const ErrorPattern vertex_error = sample_error(n, p, rng);
  const ErrorPattern oct_error = sample_error(n, p, rng);
  const bool vertex_fail = decode_side_fails(decoder, vertex_error, Side::vertex);
  const bool oct_fail = decode_side_fails(decoder, oct_error, Side::oct);
  return {vertex_fail, oct_fail};
}

double bare_block_rate(double p, int k) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("flip probability must lie in [0, 1]");
  if (k < 0) throw std::invalid_argument("qubit count must be non-negative");
  return 1.0 - std::pow(1.0 - p, k);
}

std::pair<double, double> wilson_interval(std::int64_t failures, std::int64_t trials) {
  if (trials <= 0 || failures < 0 || failures > trials) {
    throw std::invalid_argument("need 0 <= failures <= trials with trials >= 1");
  }
  const double z = 1.959963984540054;  // two-sided 95% normal quantile
  const double nt = static_cast<double>(trials);
  const double ph = static_cast<double>(failures) / nt;
  const double z2n = z * z / nt;
  const double centre = (ph + z2n / 2.0) / (1.0 + z2n);
  const double half = z * std::sqrt(ph * (1.0 - ph) / nt + z * z / (4.0 * nt * nt)) / (1.0 + z2n);
  double lo = centre - half;
  double hi = centre + half;
  // At the boundary counts the exact bound is 0 (resp. 1); rounding can
  // leave a stray epsilon on either side of it.
  if (failures == 0 || lo < 0.0) lo = 0.0;
  if (failures == trials || hi > 1.0) hi = 1.0;
  return {lo, hi};
}

std::vector<TrialStats> run_experiment(const CssCode& code, const std::vector<double>& p_list, std::int64_t trials,
                                       std::uint64_t master_seed, int workers) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  for (double p : p_list) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("flip probability must lie in [0, 1]");
  }
  int nworkers = workers;
  if (nworkers <= 0) nworkers = static_cast<int>(std::thread::hardware_concurrency());
  if (nworkers < 1) nworkers = 1;
  if (static_cast<std::int64_t>(nworkers) > trials) nworkers = static_cast<int>(trials);

  const Decoder decoder(code);

  std::vector<TrialStats> results;
  results.reserve(p_list.size());
  for (std::size_t pi = 0; pi < p_list.size(); ++pi) {
    const double p = p_list[pi];
    const auto t0 = std::chrono::steady_clock::now();

    struct Counts {
      std::int64_t block = 0, vertex = 0, oct = 0;
    };
    std::vector<Counts> per_worker(nworkers);

    // Trial t belongs to worker t % nworkers; each trial's stream depends
    // only on (master_seed, pi, t), so the partition does not affect the
    // aggregated counts.
    auto work = [&](int w) {
      Counts local;
      for (std::int64_t t = w; t < trials; t += nworkers) {
        SplitMix64 rng(trial_stream_seed(master_seed, pi, static_cast<std::uint64_t>(t)));
        const auto [vertex_fail, oct_fail] = run_trial(decoder, p, rng);
        if (vertex_fail) ++local.vertex;
        if (oct_fail) ++local.oct;
        if (vertex_fail || oct_fail) ++local.block;
      }
      per_worker[w] = local;
    };

    if (nworkers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(nworkers);
      for (int w = 0; w < nworkers; ++w) pool.emplace_back(work, w);
      for (auto& th : pool) th.join();
    }

    TrialStats st;
    st.L = code.lattice.L();
    st.p = p;
    st.trials = trials;
    for (const Counts& c : per_worker) {
      st.block_failures += c.block;
      st.vertex_side_failures += c.vertex;
      st.oct_side_failures += c.oct;
    }
    st.p_l = static_cast<double>(st.block_failures) / static_cast<double>(trials);
    std::tie(st.ci_low, st.ci_high) = wilson_interval(st.block_failures, trials);
    st.bare_rate = bare_block_rate(p, code.k);
    if (st.block_failures > 0) {
      st.coding_gain = st.bare_rate / st.p_l;
      st.gain_lower_bound = st.bare_rate / st.ci_high;
    } else {
      // No observed failures: the gain is undefined, but p_L <= ci_high
      // still bounds it from below.
      st.coding_gain.reset();
      st.gain_lower_bound = st.ci_high > 0.0 ? st.bare_rate / st.ci_high : 0.0;
    }
    st.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    results.push_back(st);
  }
  return results;
}

namespace {

std::string fmt6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

}  // namespace

std::string to_csv(const std::vector<TrialStats>& stats, bool include_timing) {
  std::string out = "L,p,trials,failures,p_L,ci_low,ci_high,bare_rate,gain,wall_time\n";
  for (const TrialStats& st : stats) {
    out += std::to_string(st.L);
    out += ',';
    out += fmt6(st.p);
    out += ',';
    out += std::to_string(st.trials);
    out += ',';
    out += std::to_string(st.block_failures);
    out += ',';
    out += fmt6(st.p_l);
    out += ',';
    out += fmt6(st.ci_low);
    out += ',';
    out += fmt6(st.ci_high);
    out += ',';
    out += fmt6(st.bare_rate);
    out += ',';
    // Undefined gain (zero failures) is reported as a one-sided bound.
    out += st.coding_gain ? fmt6(*st.coding_gain) : ">=" + fmt6(st.gain_lower_bound);
    out += ',';
    out += include_timing ? fmt6(st.wall_seconds) : "0";
    out += '\n';
  }
  return out;
}

}  // namespace fccqec
