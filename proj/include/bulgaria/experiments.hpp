#pragma once

#include <cstdint>
#include <vector>

#include "bulgaria/bounds.hpp"
#include "bulgaria/engine.hpp"
#include "bulgaria/exact_markov.hpp"
#include "bulgaria/partition.hpp"

namespace bulgaria {

struct Quantiles {
  double min = 0, q25 = 0, median = 0, q75 = 0, max = 0;
};

/// Five-number summary (linear interpolation between order statistics).
Quantiles summarize(std::vector<double> values);

/// Worker threads for trial ensembles: an explicit request wins, then the
/// BULGARIA_THREADS environment variable, then hardware concurrency.
unsigned worker_count(unsigned requested = 0);

/// Outcome of a limit-shape deviation experiment: per-trial sup-distances
/// of the (1/p)-rescaled sorted terminal state to e^{-x}, next to the
/// finite-n failure bound for the same (n, p, eps, m).
struct DeviationReport {
  GameParams params;
  std::uint64_t m = 0;
  double epsilon = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t count_within = 0;
  double empirical_prob = 0.0;
  std::vector<double> sup_distances;       // by trial
  std::vector<std::uint64_t> trial_seeds;  // derived stream seeds, by trial
  Quantiles quantiles;
  DeviationBound bound;
};

/// Plays `trials` independent card-based games of m rounds each and
/// measures every terminal state after sorting. Trial t runs on the
/// stream derive_stream_seed(params.master_seed, t), so results do not
/// depend on thread count or scheduling.
DeviationReport limit_shape_experiment(const GameParams& params, const Partition& initial,
                                       std::uint64_t m, double epsilon, std::uint64_t trials,
                                       unsigned threads = 0);

/// Default round count for the deviation experiment: ceil(rate * n) + 1.
std::uint64_t default_round_count(double epsilon, std::uint64_t n);

struct StationaryOptions {
  std::uint64_t burn_in = 1000;
  std::uint64_t samples = 100000;
  std::uint64_t thinning = 10;
  std::uint64_t oracle_cap = PartitionIndex::kDefaultCap;
};

struct StationaryReport {
  GameParams params;
  StationaryOptions options;
  bool has_empirical = false;      // n small enough for the exact oracle
  DistributionVector empirical;    // indexed like enumerate_partitions(n)
  std::uint64_t distance_count = 0;
  Quantiles distance_quantiles;    // sup-distances of sampled states
  double distance_mean = 0.0;
};

/// One long card-based chain: burn_in rounds discarded, then `samples`
/// states recorded every `thinning` rounds. Small n additionally yields
/// the empirical state distribution for oracle comparison.
StationaryReport stationary_experiment(const GameParams& params, const Partition& initial,
                                       const StationaryOptions& options);

struct CycleReport {
  Partition initial;
  std::uint64_t tail_length = 0;
  std::uint64_t cycle_length = 0;
  std::vector<Partition> cycle_states;
  std::vector<bool> near_triangular_flags;
  bool all_near_triangular = false;
};

/// Iterates the deterministic game until a repeat, splitting the orbit
/// into tail and cycle, and classifies every cycle state.
CycleReport cycle_detect(const Partition& initial);

/// Whether lambda is the triangle (k, k-1, ..., 1) for the largest k with
/// k(k+1)/2 <= n plus at most one extra card per pile, possibly plus one
/// additional pile of size 1.
bool is_near_triangular(const Partition& lambda, std::uint64_t n);

struct MarginalStat {
  std::uint64_t k = 0;
  double expected_mean = 0.0;  // n p (1-p)^{k-1}
  double expected_var = 0.0;   // binomial variance at the same rate
  double mean = 0.0;
  double variance = 0.0;  // unbiased across trials
  double mean_z = 0.0;    // (mean - expected_mean) / standard error
  double var_ratio = 0.0;
};

/// Empirical moments of selected bowls after m rounds across an ensemble.
/// Requires every k <= m: the law only covers bowls created in the run.
std::vector<MarginalStat> alpha_marginal_check(const GameParams& params,
                                               const Partition& initial, std::uint64_t m,
                                               const std::vector<std::uint64_t>& ks,
                                               std::uint64_t trials, unsigned threads = 0);

struct ShapeSnapshot {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  Partition terminal;
};

/// Terminal pile-based states for visual comparison; no pass/fail.
std::vector<ShapeSnapshot> popov_comparison(const GameParams& params, const Partition& initial,
                                            std::uint64_t m, std::uint64_t trials,
                                            unsigned threads = 0);

}  // namespace bulgaria
