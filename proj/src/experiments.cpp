#include "bulgaria/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>

#include "bulgaria/step_function.hpp"

namespace bulgaria {

Quantiles summarize(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("summarize: no values");
  std::sort(values.begin(), values.end());
  auto at = [&](double q) {
    const double pos = q * static_cast<double>(values.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(lo);
    if (lo + 1 >= values.size()) return values.back();
    return values[lo] + frac * (values[lo + 1] - values[lo]);
  };
  return Quantiles{values.front(), at(0.25), at(0.5), at(0.75), values.back()};
}

unsigned worker_count(unsigned requested) {
  constexpr unsigned kMax = 256;
  if (requested > 0) return std::min(requested, kMax);
  if (const char* env = std::getenv("BULGARIA_THREADS")) {
    char* end = nullptr;
    const unsigned long parsed = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && parsed > 0)
      return std::min(static_cast<unsigned>(parsed), kMax);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

namespace {

// Runs body(t) for every trial. Trials are striped across workers; each
// trial writes only its own output slot, so the aggregate is identical
// for every thread count.
void run_trials(std::uint64_t trials, unsigned threads,
                const std::function<void(std::uint64_t)>& body) {
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(worker_count(threads), std::max<std::uint64_t>(trials, 1)));
  if (threads <= 1) {
    for (std::uint64_t t = 0; t < trials; ++t) body(t);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::uint64_t t = w; t < trials; t += threads) body(t);
      } catch (...) {
        std::scoped_lock lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& worker : pool) worker.join();
  if (failure) std::rethrow_exception(failure);
}

double rescaled_sup_distance(const Partition& lambda, double p, std::uint64_t n) {
  const auto reference = DecreasingReference::exponential();
  return sup_distance(rescale(boundary(lambda), 1.0 / p, n), reference);
}

}  // namespace

std::uint64_t default_round_count(double epsilon, std::uint64_t n) {
  return static_cast<std::uint64_t>(std::ceil(theorem_rate(epsilon) * static_cast<double>(n))) + 1;
}

DeviationReport limit_shape_experiment(const GameParams& params, const Partition& initial,
                                       std::uint64_t m, double epsilon, std::uint64_t trials,
                                       unsigned threads) {
  validate(params);
  if (params.variant != Variant::card_based)
    throw std::invalid_argument("limit_shape_experiment: card-based variant required");
  if (!(params.p > 0.0 && params.p < 1.0))
    throw std::invalid_argument("limit_shape_experiment: p outside (0,1)");
  if (initial.n() != params.n)
    throw std::invalid_argument("limit_shape_experiment: initial state does not sum to n");
  if (m < 1) throw std::invalid_argument("limit_shape_experiment: m must be >= 1");
  if (trials < 1) throw std::invalid_argument("limit_shape_experiment: trials must be >= 1");
  if (!(epsilon > 0.0)) throw std::invalid_argument("limit_shape_experiment: epsilon must be > 0");

  DeviationReport report;
  report.params = params;
  report.m = m;
  report.epsilon = epsilon;
  report.trials = trials;
  report.sup_distances.resize(trials);
  report.trial_seeds.resize(trials);

  run_trials(trials, threads, [&](std::uint64_t t) {
    const std::uint64_t seed = derive_stream_seed(params.master_seed, t);
    Rng rng(seed);
    CardChain chain(initial);
    for (std::uint64_t r = 0; r < m; ++r) chain.step(params.p, rng);
    const Partition sorted = Partition::from_unsorted(chain.live_parts());
    report.trial_seeds[t] = seed;
    report.sup_distances[t] = rescaled_sup_distance(sorted, params.p, params.n);
  });

  for (double d : report.sup_distances)
    if (d <= epsilon) ++report.count_within;
  report.empirical_prob =
      static_cast<double>(report.count_within) / static_cast<double>(trials);
  report.quantiles = summarize(report.sup_distances);
  report.bound = finite_n_bound(params.n, params.p, epsilon, m);
  return report;
}

StationaryReport stationary_experiment(const GameParams& params, const Partition& initial,
                                       const StationaryOptions& options) {
  validate(params);
  if (params.variant != Variant::card_based)
    throw std::invalid_argument("stationary_experiment: card-based variant required");
  if (!(params.p > 0.0 && params.p < 1.0))
    throw std::invalid_argument("stationary_experiment: p outside (0,1)");
  if (initial.n() != params.n)
    throw std::invalid_argument("stationary_experiment: initial state does not sum to n");
  if (options.samples < 1) throw std::invalid_argument("stationary_experiment: samples must be >= 1");
  if (options.thinning < 1) throw std::invalid_argument("stationary_experiment: thinning must be >= 1");

  StationaryReport report;
  report.params = params;
  report.options = options;
  report.has_empirical = params.n <= options.oracle_cap;

  std::vector<std::uint64_t> counts;
  PartitionIndex index;
  if (report.has_empirical) {
    index = enumerate_partitions(params.n, options.oracle_cap);
    counts.assign(index.size(), 0);
  }

  Rng rng(params.master_seed);
  CardChain chain(initial);
  for (std::uint64_t r = 0; r < options.burn_in; ++r) chain.step(params.p, rng);

  std::vector<double> distances;
  distances.reserve(options.samples);
  double distance_sum = 0.0;
  for (std::uint64_t s = 0; s < options.samples; ++s) {
    for (std::uint64_t r = 0; r < options.thinning; ++r) chain.step(params.p, rng);
    const Partition state = Partition::from_unsorted(chain.live_parts());
    if (report.has_empirical) ++counts[index.index_of(state)];
    const double d = rescaled_sup_distance(state, params.p, params.n);
    distances.push_back(d);
    distance_sum += d;
  }

  if (report.has_empirical) {
    report.empirical.probs.resize(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i)
      report.empirical.probs[i] =
          static_cast<double>(counts[i]) / static_cast<double>(options.samples);
  }
  report.distance_count = options.samples;
  report.distance_quantiles = summarize(std::move(distances));
  report.distance_mean = distance_sum / static_cast<double>(options.samples);
  return report;
}

CycleReport cycle_detect(const Partition& initial) {
  if (initial.n() < 1) throw std::invalid_argument("cycle_detect: empty initial state");
  std::unordered_map<Partition, std::uint64_t, PartitionHash> first_seen;
  Partition state = initial;
  std::uint64_t round = 0;
  for (;;) {
    auto [it, inserted] = first_seen.emplace(state, round);
    if (!inserted) {
      CycleReport report;
      report.initial = initial;
      report.tail_length = it->second;
      report.cycle_length = round - it->second;
      report.cycle_states.reserve(report.cycle_length);
      Partition cursor = initial;
      for (std::uint64_t r = 0; r < report.tail_length; ++r) cursor = move_deterministic(cursor);
      for (std::uint64_t r = 0; r < report.cycle_length; ++r) {
        report.cycle_states.push_back(cursor);
        cursor = move_deterministic(cursor);
      }
      report.near_triangular_flags.reserve(report.cycle_states.size());
      report.all_near_triangular = true;
      for (const Partition& cycle_state : report.cycle_states) {
        const bool near = is_near_triangular(cycle_state, initial.n());
        report.near_triangular_flags.push_back(near);
        report.all_near_triangular = report.all_near_triangular && near;
      }
      return report;
    }
    state = move_deterministic(state);
    ++round;
  }
}

bool is_near_triangular(const Partition& lambda, std::uint64_t n) {
  std::uint64_t k = 0;
  while ((k + 1) * (k + 2) / 2 <= n) ++k;
  const auto& parts = lambda.parts();
  std::size_t base_len = parts.size();
  if (base_len == k + 1) {
    if (parts.back() != 1) return false;  // the optional extra pile has size 1
    base_len = k;
  } else if (base_len != k) {
    return false;
  }
  for (std::size_t i = 0; i < base_len; ++i) {
    const std::uint64_t target = k - i;  // triangle part
    if (parts[i] != target && parts[i] != target + 1) return false;
  }
  return true;
}

std::vector<MarginalStat> alpha_marginal_check(const GameParams& params,
                                               const Partition& initial, std::uint64_t m,
                                               const std::vector<std::uint64_t>& ks,
                                               std::uint64_t trials, unsigned threads) {
  validate(params);
  if (params.variant != Variant::card_based)
    throw std::invalid_argument("alpha_marginal_check: card-based variant required");
  if (initial.n() != params.n)
    throw std::invalid_argument("alpha_marginal_check: initial state does not sum to n");
  if (m < 1) throw std::invalid_argument("alpha_marginal_check: m must be >= 1");
  if (trials < 2) throw std::invalid_argument("alpha_marginal_check: need at least 2 trials");
  if (ks.empty()) throw std::invalid_argument("alpha_marginal_check: no bowl indices given");
  for (std::uint64_t k : ks)
    if (k < 1 || k > m)
      throw std::invalid_argument(
          "alpha_marginal_check: bowl index " + std::to_string(k) +
          " outside [1, m]; the binomial law only covers bowls created during the run");

  std::vector<std::vector<double>> observed(ks.size(), std::vector<double>(trials, 0.0));
  run_trials(trials, threads, [&](std::uint64_t t) {
    Rng rng(derive_stream_seed(params.master_seed, t));
    CardChain chain(initial);
    for (std::uint64_t r = 0; r < m; ++r) chain.step(params.p, rng);
    for (std::size_t i = 0; i < ks.size(); ++i)
      observed[i][t] = static_cast<double>(chain.bowl(ks[i]));
  });

  std::vector<MarginalStat> stats(ks.size());
  const double np = static_cast<double>(params.n) * params.p;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    MarginalStat& stat = stats[i];
    stat.k = ks[i];
    const double rate =
        params.p * std::pow(1.0 - params.p, static_cast<double>(ks[i] - 1));
    stat.expected_mean = np * std::pow(1.0 - params.p, static_cast<double>(ks[i] - 1));
    stat.expected_var = static_cast<double>(params.n) * rate * (1.0 - rate);

    double sum = 0.0;
    for (double v : observed[i]) sum += v;
    stat.mean = sum / static_cast<double>(trials);
    double squares = 0.0;
    for (double v : observed[i]) squares += (v - stat.mean) * (v - stat.mean);
    stat.variance = squares / static_cast<double>(trials - 1);

    const double se = std::sqrt(stat.expected_var / static_cast<double>(trials));
    stat.mean_z = se > 0.0 ? (stat.mean - stat.expected_mean) / se : 0.0;
    stat.var_ratio = stat.expected_var > 0.0 ? stat.variance / stat.expected_var : 0.0;
  }
  return stats;
}

std::vector<ShapeSnapshot> popov_comparison(const GameParams& params, const Partition& initial,
                                            std::uint64_t m, std::uint64_t trials,
                                            unsigned threads) {
  validate(params);
  if (params.variant != Variant::pile_based)
    throw std::invalid_argument("popov_comparison: pile-based variant required");
  if (initial.n() != params.n)
    throw std::invalid_argument("popov_comparison: initial state does not sum to n");
  if (trials < 1) throw std::invalid_argument("popov_comparison: trials must be >= 1");

  std::vector<ShapeSnapshot> snapshots(trials);
  run_trials(trials, threads, [&](std::uint64_t t) {
    GameParams trial_params = params;
    trial_params.master_seed = derive_stream_seed(params.master_seed, t);
    Trajectory trajectory = play(trial_params, initial, m, Recording::streaming);
    snapshots[t] = ShapeSnapshot{t, trial_params.master_seed, trajectory.final_partition()};
  });
  return snapshots;
}

}  // namespace bulgaria
