#include "bulgaria/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bulgaria {

namespace {

void require_nonnegative(double value, const char* what) {
  if (!(value >= 0.0)) throw std::invalid_argument(std::string("bounds: ") + what);
}

}  // namespace

double chernoff_upper(double mu, double eta) {
  require_nonnegative(mu, "mu must be >= 0");
  require_nonnegative(eta, "eta must be >= 0");
  return std::exp(-eta * eta * mu / (2.0 + eta));
}

double chernoff_lower(double mu, double eta) {
  require_nonnegative(mu, "mu must be >= 0");
  require_nonnegative(eta, "eta must be >= 0");
  return std::exp(-eta * eta * mu / 2.0);
}

double chernoff_abs(double mu, double gamma) {
  require_nonnegative(mu, "mu must be >= 0");
  require_nonnegative(gamma, "gamma must be >= 0");
  if (gamma == 0.0) return 2.0;
  return 2.0 * std::exp(-gamma * gamma / (2.0 * mu + gamma));
}

double theorem_rate(double eps) {
  require_nonnegative(eps, "eps must be >= 0");
  return eps * eps / (2.0 + eps);
}

DeviationBound finite_n_bound(std::uint64_t n, double p, double eps1, std::uint64_t m) {
  if (n < 1) throw std::invalid_argument("finite_n_bound: n must be >= 1");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("finite_n_bound: p outside (0,1)");
  if (!(eps1 > 0.0)) throw std::invalid_argument("finite_n_bound: eps1 must be > 0");
  if (m < 1) throw std::invalid_argument("finite_n_bound: m must be >= 1");

  DeviationBound bound;
  bound.epsilon = eps1;
  bound.n = n;
  bound.p = p;
  bound.m = m;
  const double np = static_cast<double>(n) * p;
  const double rate = theorem_rate(eps1);
  bound.asymptotic_rate = rate * np;
  bound.regime1 = std::min(1.0, 2.0 * static_cast<double>(m) * std::exp(-rate * np));
  bound.regime2 = std::min(1.0, static_cast<double>(n) * std::exp(-static_cast<double>(m) * p));
  bound.combined = std::min(1.0, bound.regime1 + bound.regime2);
  return bound;
}

double uniform_conv_gap(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("uniform_conv_gap: p outside (0,1)");
  // (1-p)^{x/p} = exp(x log(1-p)/p); log base computed once.
  const double log_base = std::log1p(-p) / p;
  constexpr double kLimit = 40.0;
  constexpr int kSteps = 400000;
  double gap = 0.0;
  for (int i = 0; i <= kSteps; ++i) {
    const double x = kLimit * static_cast<double>(i) / kSteps;
    gap = std::max(gap, std::exp(-x) - std::exp(x * log_base));
  }
  // Beyond the grid both terms sit below e^{-40}.
  return std::max(gap, std::exp(-kLimit));
}

}  // namespace bulgaria
