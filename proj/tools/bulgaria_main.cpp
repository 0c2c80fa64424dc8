#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bulgaria/bounds.hpp"
#include "bulgaria/engine.hpp"
#include "bulgaria/exact_markov.hpp"
#include "bulgaria/experiments.hpp"
#include "bulgaria/io.hpp"
#include "bulgaria/partition.hpp"
#include "bulgaria/step_function.hpp"

namespace {

using bulgaria::GameParams;
using bulgaria::Partition;
using bulgaria::Variant;
using json = bulgaria::io::json;

constexpr std::uint64_t kInitialStreamTag = 0x696e6974;  // start-state stream

struct StartOpts {
  std::string start = "triangular";
  std::vector<std::uint64_t> initial;
};

void add_start_options(CLI::App* cmd, StartOpts& opts) {
  cmd->add_option("--start", opts.start, "initial configuration: triangular, single, ones or random")
      ->check(CLI::IsMember({"triangular", "single", "ones", "random"}))
      ->capture_default_str();
  cmd->add_option("--initial", opts.initial, "explicit initial pile sizes (overrides --start)")
      ->delimiter(',');
}

Partition resolve_initial(std::uint64_t n, const StartOpts& opts, std::uint64_t seed) {
  if (!opts.initial.empty()) {
    Partition p = Partition::from_unsorted(opts.initial);
    if (p.n() != n)
      throw std::invalid_argument("--initial pile sizes sum to " + std::to_string(p.n()) +
                                  ", expected n = " + std::to_string(n));
    return p;
  }
  if (opts.start == "triangular") return bulgaria::triangular_start(n);
  if (opts.start == "single") return Partition{{n}};
  if (opts.start == "ones") return Partition{std::vector<std::uint64_t>(n, 1)};
  bulgaria::Rng rng(bulgaria::derive_stream_seed(seed, kInitialStreamTag));
  return bulgaria::random_partition(n, rng);
}

void write_outputs(const std::string& json_path, const json& envelope,
                   const std::string& csv_path, const std::string& csv) {
  if (!json_path.empty()) bulgaria::io::write_file(json_path, bulgaria::io::dump_json(envelope));
  if (!csv_path.empty()) bulgaria::io::write_file(csv_path, csv);
}

// ---------------------------------------------------------------- simulate

struct SimulateOpts {
  std::string variant = "card";
  std::uint64_t n = 100000;
  double p = 0.01;
  std::uint64_t rounds = 200;
  std::uint64_t seed = 0;
  StartOpts start;
  std::string csv_path, json_path, plot_path;
  double scale = 0.0;  // 0 = auto
};

int run_simulate(const SimulateOpts& opts) {
  GameParams params{opts.n, opts.p, bulgaria::variant_from_name(opts.variant), opts.seed};
  const Partition initial = resolve_initial(opts.n, opts.start, opts.seed);
  const auto trajectory =
      bulgaria::play(params, initial, opts.rounds, bulgaria::Recording::streaming);

  Partition terminal = params.variant == Variant::card_based
                           ? bulgaria::ord(trajectory.final_composition())
                           : trajectory.final_partition();

  double scale = opts.scale;
  if (scale <= 0.0)
    scale = params.variant == Variant::deterministic || params.p <= 0.0
                ? std::sqrt(2.0 * static_cast<double>(opts.n))
                : 1.0 / params.p;
  const auto rescaled = bulgaria::rescale(bulgaria::boundary(terminal), scale, opts.n);

  std::optional<double> distance;
  if (params.variant == Variant::card_based && params.p > 0.0 && params.p < 1.0)
    distance = bulgaria::sup_distance(rescaled, bulgaria::DecreasingReference::exponential());

  json config{{"subcommand", "simulate"},
              {"variant", opts.variant},
              {"n", opts.n},
              {"p", opts.p},
              {"rounds", opts.rounds},
              {"seed", opts.seed},
              {"start", opts.start.start},
              {"scale", scale}};
  json results;
  results["terminal_partition"] = bulgaria::io::partition_json(terminal);
  results["terminal_pile_count"] = terminal.length();
  if (distance) results["sup_distance_to_exp"] = *distance;
  write_outputs(opts.json_path, bulgaria::io::envelope(config, results, opts.seed),
                opts.csv_path, bulgaria::io::trajectory_csv(trajectory));

  if (!opts.plot_path.empty()) {
    const auto reference = bulgaria::DecreasingReference::exponential();
    const bool with_reference = params.variant == Variant::card_based;
    const std::string title = std::string(bulgaria::variant_name(params.variant)) +
                              "-based solitaire, n=" + std::to_string(opts.n) +
                              ", p=" + bulgaria::io::format_double(opts.p) +
                              ", m=" + std::to_string(opts.rounds);
    bulgaria::io::write_file(
        opts.plot_path,
        bulgaria::io::svg_plot(rescaled, with_reference ? &reference : nullptr, title));
  }

  std::cout << "simulate: variant=" << opts.variant << " n=" << opts.n << " rounds=" << opts.rounds
            << " terminal piles=" << terminal.length();
  if (distance) std::cout << " sup-distance to e^-x=" << *distance;
  std::cout << '\n';
  return 0;
}

// -------------------------------------------------------------- limit-shape

struct LimitShapeOpts {
  std::uint64_t n = 10000;
  double p = 0.02;
  double epsilon = 0.1;
  std::uint64_t rounds = 0;  // 0 = ceil(rate*n)+1
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  StartOpts start;
  std::string csv_path, json_path;
};

int run_limit_shape(const LimitShapeOpts& opts) {
  GameParams params{opts.n, opts.p, Variant::card_based, opts.seed};
  const Partition initial = resolve_initial(opts.n, opts.start, opts.seed);
  const std::uint64_t m =
      opts.rounds > 0 ? opts.rounds : bulgaria::default_round_count(opts.epsilon, opts.n);
  const auto report =
      bulgaria::limit_shape_experiment(params, initial, m, opts.epsilon, opts.trials, opts.threads);

  json config{{"subcommand", "limit-shape"}, {"n", opts.n},         {"p", opts.p},
              {"epsilon", opts.epsilon},     {"rounds", m},         {"trials", opts.trials},
              {"seed", opts.seed},           {"start", opts.start.start}};
  write_outputs(opts.json_path,
                bulgaria::io::envelope(config, bulgaria::io::deviation_results_json(report), opts.seed),
                opts.csv_path, bulgaria::io::deviation_report_csv(report));

  std::cout << "limit-shape: m=" << m << " empirical P(dist<=" << opts.epsilon
            << ")=" << report.empirical_prob << " median=" << report.quantiles.median
            << " bound=" << report.bound.combined << '\n';
  return 0;
}

// --------------------------------------------------------------- stationary

struct StationaryOpts {
  std::uint64_t n = 6;
  double p = 0.3;
  std::uint64_t burn_in = 0;  // 0 = 10 * ceil(1/p)
  std::uint64_t samples = 100000;
  std::uint64_t thinning = 10;
  std::uint64_t seed = 0;
  StartOpts start;
  std::string csv_path, json_path;
};

int run_stationary(const StationaryOpts& opts) {
  GameParams params{opts.n, opts.p, Variant::card_based, opts.seed};
  const Partition initial = resolve_initial(opts.n, opts.start, opts.seed);
  bulgaria::StationaryOptions options;
  options.burn_in = opts.burn_in > 0
                        ? opts.burn_in
                        : 10 * static_cast<std::uint64_t>(std::ceil(1.0 / opts.p));
  options.samples = opts.samples;
  options.thinning = opts.thinning;
  const auto report = bulgaria::stationary_experiment(params, initial, options);

  std::optional<double> tv;
  std::string csv;
  if (report.has_empirical) {
    const auto index = bulgaria::enumerate_partitions(opts.n);
    const auto exact = bulgaria::stationary_exact(bulgaria::transition_matrix(index, opts.p));
    tv = bulgaria::total_variation(report.empirical, exact);
    csv = bulgaria::io::distribution_csv(index, report.empirical);
  } else {
    bulgaria::io::CsvTable table;
    table.header = {"statistic", "value"};
    auto add = [&table](const std::string& name, double v) {
      table.rows.push_back({name, bulgaria::io::format_double(v)});
    };
    add("mean", report.distance_mean);
    add("min", report.distance_quantiles.min);
    add("q25", report.distance_quantiles.q25);
    add("median", report.distance_quantiles.median);
    add("q75", report.distance_quantiles.q75);
    add("max", report.distance_quantiles.max);
    csv = bulgaria::io::emit_csv(table);
  }

  json config{{"subcommand", "stationary"},  {"n", opts.n},
              {"p", opts.p},                 {"burn_in", options.burn_in},
              {"samples", opts.samples},     {"thinning", opts.thinning},
              {"seed", opts.seed},           {"start", opts.start.start}};
  write_outputs(opts.json_path,
                bulgaria::io::envelope(config, bulgaria::io::stationary_results_json(report, tv), opts.seed),
                opts.csv_path, csv);

  std::cout << "stationary: n=" << opts.n << " p=" << opts.p << " samples=" << opts.samples
            << " mean distance=" << report.distance_mean;
  if (tv) std::cout << " TV to exact=" << *tv;
  std::cout << '\n';
  return 0;
}

// ---------------------------------------------------------- stationary-exact

struct StationaryExactOpts {
  std::uint64_t n = 6;
  double p = 0.3;
  std::string out_path, matrix_path, json_path;
};

int run_stationary_exact(const StationaryExactOpts& opts) {
  const auto index = bulgaria::enumerate_partitions(opts.n);
  const auto matrix = bulgaria::transition_matrix(index, opts.p);
  const auto pi = bulgaria::stationary_exact(matrix);
  const double residual = bulgaria::stationary_residual(matrix, pi);

  if (!opts.out_path.empty())
    bulgaria::io::write_file(opts.out_path, bulgaria::io::distribution_csv(index, pi));
  if (!opts.matrix_path.empty())
    bulgaria::io::write_file(opts.matrix_path, bulgaria::io::matrix_csv(index, matrix));
  if (!opts.json_path.empty()) {
    json config{{"subcommand", "stationary-exact"}, {"n", opts.n}, {"p", opts.p}};
    json results{{"states", index.size()}, {"residual", residual}};
    json probs = json::array();
    for (std::size_t i = 0; i < index.size(); ++i)
      probs.push_back({{"partition", bulgaria::io::partition_json(index.partition(i))},
                       {"probability", pi.probs[i]}});
    results["stationary"] = std::move(probs);
    bulgaria::io::write_file(opts.json_path,
                             bulgaria::io::dump_json(bulgaria::io::envelope(config, results, 0)));
  }

  std::cout << "stationary-exact: n=" << opts.n << " p=" << opts.p << " states=" << index.size()
            << " residual=" << residual << '\n';
  return 0;
}

// -------------------------------------------------------------------- cycle

struct CycleOpts {
  std::uint64_t n = 10;
  std::uint64_t seed = 0;
  StartOpts start{"single", {}};
  std::string csv_path, json_path;
};

int run_cycle(const CycleOpts& opts) {
  const Partition initial = resolve_initial(opts.n, opts.start, opts.seed);
  const auto report = bulgaria::cycle_detect(initial);

  json config{{"subcommand", "cycle"},
              {"n", opts.n},
              {"seed", opts.seed},
              {"start", opts.start.start},
              {"initial", bulgaria::io::partition_json(initial)}};
  write_outputs(opts.json_path,
                bulgaria::io::envelope(config, bulgaria::io::cycle_results_json(report), opts.seed),
                opts.csv_path, bulgaria::io::cycle_csv(report));

  std::cout << "cycle: n=" << opts.n << " tail=" << report.tail_length
            << " cycle length=" << report.cycle_length
            << (report.all_near_triangular ? " (all states near-triangular)" : "") << '\n';
  return 0;
}

// ---------------------------------------------------------------- marginals

struct MarginalsOpts {
  std::uint64_t n = 10000;
  double p = 0.02;
  std::uint64_t rounds = 100;
  std::vector<std::uint64_t> ks{1, 10, 50};
  std::uint64_t trials = 2000;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  StartOpts start;
  std::string csv_path, json_path;
};

int run_marginals(const MarginalsOpts& opts) {
  GameParams params{opts.n, opts.p, Variant::card_based, opts.seed};
  const Partition initial = resolve_initial(opts.n, opts.start, opts.seed);
  const auto stats = bulgaria::alpha_marginal_check(params, initial, opts.rounds, opts.ks,
                                                    opts.trials, opts.threads);

  json config{{"subcommand", "marginals"}, {"n", opts.n},         {"p", opts.p},
              {"rounds", opts.rounds},     {"trials", opts.trials}, {"seed", opts.seed},
              {"start", opts.start.start}};
  write_outputs(opts.json_path,
                bulgaria::io::envelope(config, bulgaria::io::marginal_results_json(stats), opts.seed),
                opts.csv_path, bulgaria::io::marginals_csv(stats));

  for (const auto& s : stats)
    std::cout << "marginals: k=" << s.k << " mean=" << s.mean << " expected=" << s.expected_mean
              << " z=" << s.mean_z << " var ratio=" << s.var_ratio << '\n';
  return 0;
}

// ------------------------------------------------------------------- bounds

struct BoundsOpts {
  std::uint64_t n = 1000000;
  double p = 0.01;
  double epsilon = 0.3;
  std::uint64_t rounds = 0;
  std::string json_path;
};

int run_bounds(const BoundsOpts& opts) {
  const std::uint64_t m =
      opts.rounds > 0 ? opts.rounds : bulgaria::default_round_count(opts.epsilon, opts.n);
  const auto bound = bulgaria::finite_n_bound(opts.n, opts.p, opts.epsilon, m);
  const double gap = bulgaria::uniform_conv_gap(opts.p);

  if (!opts.json_path.empty()) {
    json config{{"subcommand", "bounds"},
                {"n", opts.n},
                {"p", opts.p},
                {"epsilon", opts.epsilon},
                {"rounds", m}};
    json results{{"theorem_rate", bulgaria::theorem_rate(opts.epsilon)},
                 {"finite_n_bound", bulgaria::io::bound_json(bound)},
                 {"uniform_conv_gap", gap}};
    bulgaria::io::write_file(opts.json_path,
                             bulgaria::io::dump_json(bulgaria::io::envelope(config, results, 0)));
  }

  std::cout << "bounds: n=" << opts.n << " p=" << opts.p << " epsilon=" << opts.epsilon
            << " m=" << m << " regime1=" << bound.regime1 << " regime2=" << bound.regime2
            << " combined=" << bound.combined << " conv gap=" << gap << '\n';
  return 0;
}

// -------------------------------------------------------------------- popov

struct PopovOpts {
  std::uint64_t n = 465;
  double p = 0.1;
  std::uint64_t rounds = 200;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  StartOpts start;
  std::string csv_path, json_path, plot_path;
};

int run_popov(const PopovOpts& opts) {
  GameParams params{opts.n, opts.p, Variant::pile_based, opts.seed};
  const Partition initial = resolve_initial(opts.n, opts.start, opts.seed);
  const auto snapshots =
      bulgaria::popov_comparison(params, initial, opts.rounds, opts.trials, opts.threads);

  json config{{"subcommand", "popov"}, {"n", opts.n},           {"p", opts.p},
              {"rounds", opts.rounds}, {"trials", opts.trials}, {"seed", opts.seed},
              {"start", opts.start.start}};
  json results;
  json terminal = json::array();
  for (const auto& s : snapshots)
    terminal.push_back({{"trial", s.trial},
                        {"seed", s.seed},
                        {"pile_count", s.terminal.length()},
                        {"largest", s.terminal.part(1)}});
  results["snapshots"] = std::move(terminal);
  write_outputs(opts.json_path, bulgaria::io::envelope(config, results, opts.seed),
                opts.csv_path, bulgaria::io::snapshots_csv(snapshots));

  if (!opts.plot_path.empty() && !snapshots.empty()) {
    const double scale = opts.p > 0.0 ? 1.0 / opts.p : std::sqrt(2.0 * static_cast<double>(opts.n));
    const auto rescaled =
        bulgaria::rescale(bulgaria::boundary(snapshots.front().terminal), scale, opts.n);
    const std::string title = "pile-based solitaire, n=" + std::to_string(opts.n) +
                              ", p=" + bulgaria::io::format_double(opts.p) +
                              ", m=" + std::to_string(opts.rounds);
    bulgaria::io::write_file(opts.plot_path, bulgaria::io::svg_plot(rescaled, nullptr, title));
  }

  std::cout << "popov: n=" << opts.n << " p=" << opts.p << " trials=" << snapshots.size()
            << " first terminal piles=" << (snapshots.empty() ? 0 : snapshots.front().terminal.length())
            << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Card-based stochastic Bulgarian solitaire: simulation, exact oracles and bounds"};
  app.require_subcommand(1);

  SimulateOpts simulate_opts;
  auto* simulate = app.add_subcommand("simulate", "play one trajectory and report the terminal shape");
  simulate->set_config("--config");
  simulate->add_option("--variant", simulate_opts.variant, "deterministic, card or pile")
      ->check(CLI::IsMember({"deterministic", "det", "card", "pile"}))
      ->capture_default_str();
  simulate->add_option("--n", simulate_opts.n, "number of cards")->check(CLI::PositiveNumber)
      ->capture_default_str();
  simulate->add_option("--p", simulate_opts.p, "pick probability")->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  simulate->add_option("--rounds", simulate_opts.rounds, "rounds to play")->capture_default_str();
  simulate->add_option("--seed", simulate_opts.seed, "master seed")->capture_default_str();
  add_start_options(simulate, simulate_opts.start);
  simulate->add_option("--csv", simulate_opts.csv_path, "per-round CSV output path");
  simulate->add_option("--out", simulate_opts.json_path, "JSON report path");
  simulate->add_option("--plot", simulate_opts.plot_path, "SVG plot of the terminal shape");
  simulate->add_option("--scale", simulate_opts.scale, "rescaling factor (default 1/p)");

  LimitShapeOpts limit_opts;
  auto* limit = app.add_subcommand("limit-shape", "deviation experiment against e^-x");
  limit->set_config("--config");
  limit->add_option("--n", limit_opts.n, "number of cards")->check(CLI::PositiveNumber)
      ->capture_default_str();
  limit->add_option("--p", limit_opts.p, "pick probability")->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  limit->add_option("--epsilon", limit_opts.epsilon, "deviation threshold")
      ->check(CLI::PositiveNumber)->capture_default_str();
  limit->add_option("--rounds", limit_opts.rounds, "rounds (0 = ceil(rate*n)+1)")
      ->capture_default_str();
  limit->add_option("--trials", limit_opts.trials, "independent trajectories")
      ->check(CLI::PositiveNumber)->capture_default_str();
  limit->add_option("--seed", limit_opts.seed, "master seed")->capture_default_str();
  limit->add_option("--threads", limit_opts.threads, "worker threads (0 = auto)");
  add_start_options(limit, limit_opts.start);
  limit->add_option("--csv", limit_opts.csv_path, "per-trial CSV output path");
  limit->add_option("--out", limit_opts.json_path, "JSON report path");

  StationaryOpts stationary_opts;
  auto* stationary = app.add_subcommand("stationary", "long-run chain sampling");
  stationary->set_config("--config");
  stationary->add_option("--n", stationary_opts.n, "number of cards")->check(CLI::PositiveNumber)
      ->capture_default_str();
  stationary->add_option("--p", stationary_opts.p, "pick probability")->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  stationary->add_option("--burn-in", stationary_opts.burn_in, "discarded rounds (0 = 10*ceil(1/p))")
      ->capture_default_str();
  stationary->add_option("--samples", stationary_opts.samples, "recorded states")
      ->check(CLI::PositiveNumber)->capture_default_str();
  stationary->add_option("--thinning", stationary_opts.thinning, "rounds between records")
      ->check(CLI::PositiveNumber)->capture_default_str();
  stationary->add_option("--seed", stationary_opts.seed, "master seed")->capture_default_str();
  add_start_options(stationary, stationary_opts.start);
  stationary->add_option("--csv", stationary_opts.csv_path, "CSV output path");
  stationary->add_option("--out", stationary_opts.json_path, "JSON report path");

  StationaryExactOpts exact_opts;
  auto* exact = app.add_subcommand("stationary-exact", "exact stationary distribution (small n)");
  exact->set_config("--config");
  exact->add_option("--n", exact_opts.n, "number of cards (within the oracle cap)")
      ->check(CLI::PositiveNumber)->capture_default_str();
  exact->add_option("--p", exact_opts.p, "pick probability in (0,1)")->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  exact->add_option("--out", exact_opts.out_path, "stationary distribution CSV path");
  exact->add_option("--matrix-csv", exact_opts.matrix_path, "transition matrix CSV path");
  exact->add_option("--json", exact_opts.json_path, "JSON report path");

  CycleOpts cycle_opts;
  auto* cycle = app.add_subcommand("cycle", "deterministic game cycle detection");
  cycle->set_config("--config");
  cycle->add_option("--n", cycle_opts.n, "number of cards")->check(CLI::PositiveNumber)
      ->capture_default_str();
  cycle->add_option("--seed", cycle_opts.seed, "seed for --start random")->capture_default_str();
  add_start_options(cycle, cycle_opts.start);
  cycle->add_option("--csv", cycle_opts.csv_path, "cycle states CSV path");
  cycle->add_option("--out", cycle_opts.json_path, "JSON report path");

  MarginalsOpts marginals_opts;
  auto* marginals = app.add_subcommand("marginals", "bowl-size moment checks");
  marginals->set_config("--config");
  marginals->add_option("--n", marginals_opts.n, "number of cards")->check(CLI::PositiveNumber)
      ->capture_default_str();
  marginals->add_option("--p", marginals_opts.p, "pick probability")->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  marginals->add_option("--rounds", marginals_opts.rounds, "rounds per trajectory")
      ->check(CLI::PositiveNumber)->capture_default_str();
  marginals->add_option("--ks", marginals_opts.ks, "bowl indices")->delimiter(',')
      ->capture_default_str();
  marginals->add_option("--trials", marginals_opts.trials, "ensemble size")
      ->check(CLI::PositiveNumber)->capture_default_str();
  marginals->add_option("--seed", marginals_opts.seed, "master seed")->capture_default_str();
  marginals->add_option("--threads", marginals_opts.threads, "worker threads (0 = auto)");
  add_start_options(marginals, marginals_opts.start);
  marginals->add_option("--csv", marginals_opts.csv_path, "CSV output path");
  marginals->add_option("--out", marginals_opts.json_path, "JSON report path");

  BoundsOpts bounds_opts;
  auto* bounds = app.add_subcommand("bounds", "closed-form deviation bounds");
  bounds->set_config("--config");
  bounds->add_option("--n", bounds_opts.n, "number of cards")->check(CLI::PositiveNumber)
      ->capture_default_str();
  bounds->add_option("--p", bounds_opts.p, "pick probability")->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  bounds->add_option("--epsilon", bounds_opts.epsilon, "deviation budget")
      ->check(CLI::PositiveNumber)->capture_default_str();
  bounds->add_option("--rounds", bounds_opts.rounds, "rounds (0 = ceil(rate*n)+1)")
      ->capture_default_str();
  bounds->add_option("--out", bounds_opts.json_path, "JSON report path");

  PopovOpts popov_opts;
  auto* popov = app.add_subcommand("popov", "pile-based variant snapshots");
  popov->set_config("--config");
  popov->add_option("--n", popov_opts.n, "number of cards")->check(CLI::PositiveNumber)
      ->capture_default_str();
  popov->add_option("--p", popov_opts.p, "per-pile release probability")
      ->check(CLI::Range(0.0, 1.0))->capture_default_str();
  popov->add_option("--rounds", popov_opts.rounds, "rounds per trajectory")->capture_default_str();
  popov->add_option("--trials", popov_opts.trials, "ensemble size")->check(CLI::PositiveNumber)
      ->capture_default_str();
  popov->add_option("--seed", popov_opts.seed, "master seed")->capture_default_str();
  popov->add_option("--threads", popov_opts.threads, "worker threads (0 = auto)");
  add_start_options(popov, popov_opts.start);
  popov->add_option("--csv", popov_opts.csv_path, "snapshot CSV path");
  popov->add_option("--out", popov_opts.json_path, "JSON report path");
  popov->add_option("--plot", popov_opts.plot_path, "SVG plot of the first terminal shape");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (simulate->parsed()) return run_simulate(simulate_opts);
    if (limit->parsed()) return run_limit_shape(limit_opts);
    if (stationary->parsed()) return run_stationary(stationary_opts);
    if (exact->parsed()) return run_stationary_exact(exact_opts);
    if (cycle->parsed()) return run_cycle(cycle_opts);
    if (marginals->parsed()) return run_marginals(marginals_opts);
    if (bounds->parsed()) return run_bounds(bounds_opts);
    if (popov->parsed()) return run_popov(popov_opts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
