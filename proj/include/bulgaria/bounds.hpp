#pragma once

#include <cstdint>

namespace bulgaria {

/// P(X >= (1+eta) mu) <= exp(-eta^2 mu / (2+eta)) for X a sum of
/// independent 0/1 variables with mean mu.
double chernoff_upper(double mu, double eta);

/// P(X <= (1-eta) mu) <= exp(-eta^2 mu / 2).
double chernoff_lower(double mu, double eta);

/// P(|X - mu| >= gamma) <= 2 exp(-gamma^2 / (2 mu + gamma)). At mu = 0
/// the algebraic limit 2 exp(-gamma) is returned (a point mass at 0 has
/// zero deviation probability, so any value is a valid bound).
double chernoff_abs(double mu, double gamma);

/// The deviation rate eps^2 / (2 + eps).
double theorem_rate(double eps);

/// Non-asymptotic failure-probability budget for an n-card game at pick
/// probability p observed after m rounds with per-bowl deviation budget
/// eps1 * n * p. regime1 covers the bowls created during the run,
/// regime2 the event that some older bowl still holds a card.
struct DeviationBound {
  double epsilon = 0.0;
  std::uint64_t n = 0;
  double p = 0.0;
  std::uint64_t m = 0;
  double regime1 = 0.0;
  double regime2 = 0.0;
  double combined = 0.0;         // min(1, regime1 + regime2)
  double asymptotic_rate = 0.0;  // theorem_rate(eps1) * n * p
};

DeviationBound finite_n_bound(std::uint64_t n, double p, double eps1, std::uint64_t m);

/// sup_{x >= 0} (e^{-x} - (1-p)^{x/p}), nonnegative for p in (0,1).
/// Evaluated on a dense grid over [0, 40] plus the analytic tail bound
/// e^{-40}.
double uniform_conv_gap(double p);

}  // namespace bulgaria
