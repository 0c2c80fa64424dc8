#include "bulgaria/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace bulgaria {

namespace {

std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// CDF walk along the pmf recurrence. Requires count * p modest so the
// starting mass (1-p)^count stays well above the underflow range.
std::uint64_t binomial_inversion(std::uint64_t count, double p, Rng& rng) {
  const double odds = p / (1.0 - p);
  double pmf = std::exp(static_cast<double>(count) * std::log1p(-p));
  double cdf = pmf;
  const double u = rng.next_double();
  std::uint64_t k = 0;
  while (u > cdf && k < count) {
    ++k;
    pmf *= odds * static_cast<double>(count - k + 1) / static_cast<double>(k);
    cdf += pmf;
  }
  return k;
}

// Transformed rejection with squeeze (Hormann's BTRS), valid for
// count * p >= 10 with p <= 1/2. Acceptance tests compare against the
// exact log-pmf, so the output law is Binomial(count, p) exactly.
std::uint64_t binomial_btrs(std::uint64_t count, double p, Rng& rng) {
  const double n = static_cast<double>(count);
  const double q = 1.0 - p;
  const double stddev = std::sqrt(n * p * q);
  const double b = 1.15 + 2.53 * stddev;
  const double a = -0.0873 + 0.0248 * b + 0.01 * p;
  const double c = n * p + 0.5;
  const double v_r = 0.92 - 4.2 / b;
  const double alpha = (2.83 + 5.1 / b) * stddev;
  const double log_odds = std::log(p / q);
  const double m = std::floor((n + 1.0) * p);
  const double h = std::lgamma(m + 1.0) + std::lgamma(n - m + 1.0);

  for (;;) {
    const double u = rng.next_double() - 0.5;
    double v = rng.next_double();
    const double us = 0.5 - std::abs(u);
    const double kf = std::floor((2.0 * a / us + b) * u + c);
    if (kf < 0.0 || kf > n) continue;
    if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(kf);
    v = std::log(v * alpha / (a / (us * us) + b));
    const double bound = h - std::lgamma(kf + 1.0) - std::lgamma(n - kf + 1.0) +
                         (kf - m) * log_odds;
    if (v <= bound) return static_cast<std::uint64_t>(kf);
  }
}

}  // namespace

std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::uint64_t stream) noexcept {
  return master_seed ^ mix64(stream + 0x9e3779b97f4a7c15ull);
}

std::uint64_t binomial_sample(std::uint64_t count, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("binomial_sample: p outside [0,1]");
  if (count == 0 || p == 0.0) return 0;
  if (p == 1.0) return count;
  if (p > 0.5) return count - binomial_sample(count, 1.0 - p, rng);
  if (static_cast<double>(count) * p < 10.0) return binomial_inversion(count, p, rng);
  return binomial_btrs(count, p, rng);
}

}  // namespace bulgaria
