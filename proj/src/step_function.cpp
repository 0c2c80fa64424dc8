#include "bulgaria/step_function.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bulgaria {

StepFunction::StepFunction(std::vector<double> breaks, std::vector<double> values)
    : breaks_(std::move(breaks)), values_(std::move(values)) {
  if (values_.empty()) {
    if (!breaks_.empty()) throw std::invalid_argument("StepFunction: zero function takes no breakpoints");
    return;
  }
  if (breaks_.size() != values_.size() + 1)
    throw std::invalid_argument("StepFunction: need one more breakpoint than values");
  if (breaks_.front() != 0.0)
    throw std::invalid_argument("StepFunction: support must start at 0");
  for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
    if (!(breaks_[i] < breaks_[i + 1]))
      throw std::invalid_argument("StepFunction: breakpoints must be strictly increasing");
  for (double v : values_)
    if (!(v >= 0.0)) throw std::invalid_argument("StepFunction: values must be nonnegative");
}

double StepFunction::operator()(double x) const {
  assert(x >= 0.0);
  if (values_.empty() || x >= breaks_.back()) return 0.0;
  // Last breakpoint strictly greater than x starts the next segment.
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
  return values_[static_cast<std::size_t>(it - breaks_.begin()) - 1];
}

double StepFunction::area() const {
  double total = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i)
    total += (breaks_[i + 1] - breaks_[i]) * values_[i];
  return total;
}

bool StepFunction::weakly_decreasing() const {
  for (std::size_t i = 0; i + 1 < values_.size(); ++i)
    if (values_[i] < values_[i + 1]) return false;
  return true;
}

namespace {

StepFunction unit_boundary(const std::vector<std::uint64_t>& parts) {
  std::size_t len = parts.size();
  while (len > 0 && parts[len - 1] == 0) --len;  // trailing empty piles
  if (len == 0) return StepFunction{};
  std::vector<double> breaks(len + 1);
  std::vector<double> values(len);
  for (std::size_t i = 0; i < len; ++i) {
    breaks[i] = static_cast<double>(i);
    values[i] = static_cast<double>(parts[i]);
  }
  breaks[len] = static_cast<double>(len);
  return StepFunction{std::move(breaks), std::move(values)};
}

}  // namespace

StepFunction boundary(const Partition& lambda) { return unit_boundary(lambda.parts()); }

StepFunction boundary(const WeakComposition& alpha) { return unit_boundary(alpha.parts()); }

StepFunction rescale(const StepFunction& f, double a, std::uint64_t n) {
  if (!(a > 0.0)) throw std::invalid_argument("rescale: scaling factor must be positive");
  if (n == 0) throw std::invalid_argument("rescale: object size must be positive");
  std::vector<double> breaks(f.breaks());
  std::vector<double> values(f.values());
  const double height = a / static_cast<double>(n);
  for (double& b : breaks) b /= a;
  for (double& v : values) v *= height;
  return StepFunction{std::move(breaks), std::move(values)};
}

DecreasingReference::DecreasingReference(std::function<double(double)> eval,
                                         bool weakly_decreasing)
    : eval_(std::move(eval)), weakly_decreasing_(weakly_decreasing) {}

DecreasingReference DecreasingReference::exponential() {
  return DecreasingReference([](double x) { return std::exp(-x); }, true);
}

DecreasingReference DecreasingReference::scaled_exponential(double scale, double rate) {
  if (!(scale >= 0.0) || !(rate > 0.0))
    throw std::invalid_argument("scaled_exponential: need scale >= 0 and rate > 0");
  return DecreasingReference([scale, rate](double x) { return scale * std::exp(-rate * x); },
                             true);
}

DecreasingReference DecreasingReference::zero() {
  return DecreasingReference([](double) { return 0.0; }, true);
}

namespace {

void require_decreasing(const DecreasingReference& g) {
  if (!g.is_weakly_decreasing())
    throw std::invalid_argument("distance: reference must be declared weakly decreasing");
}

}  // namespace

double sup_distance(const StepFunction& f, const DecreasingReference& g) {
  require_decreasing(g);
  double best = 0.0;
  const auto& breaks = f.breaks();
  const auto& values = f.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    // g is monotone and continuous, so the sup of |c - g| on [l, r) is
    // attained in the limit at one of the two ends.
    best = std::max(best, std::abs(values[i] - g(breaks[i])));
    best = std::max(best, std::abs(values[i] - g(breaks[i + 1])));
  }
  return std::max(best, g(f.support_end()));
}

double sup_distance(const StepFunction& f, const StepFunction& g) {
  std::vector<double> events;
  events.reserve(f.breaks().size() + g.breaks().size() + 1);
  events.push_back(0.0);
  events.insert(events.end(), f.breaks().begin(), f.breaks().end());
  events.insert(events.end(), g.breaks().begin(), g.breaks().end());
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end()), events.end());
  double best = 0.0;
  for (double x : events) best = std::max(best, std::abs(f(x) - g(x)));
  return best;
}

double restricted_distance(const StepFunction& f, const DecreasingReference& g,
                           double lo, double hi) {
  require_decreasing(g);
  if (!(lo >= 0.0)) throw std::invalid_argument("restricted_distance: interval must start at >= 0");
  if (hi < lo) throw std::invalid_argument("restricted_distance: interval end before start");
  if (hi == lo) return distance_at(f, g, lo);
  double best = 0.0;
  const auto& breaks = f.breaks();
  const auto& values = f.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double l = breaks[i];
    const double r = breaks[i + 1];
    if (r <= lo || l > hi) continue;
    best = std::max(best, std::abs(values[i] - g(std::max(l, lo))));
    best = std::max(best, std::abs(values[i] - g(std::min(r, hi))));
  }
  const double end = f.support_end();
  if (hi >= end) best = std::max(best, g(std::max(lo, end)));
  return best;
}

double distance_at(const StepFunction& f, const DecreasingReference& g, double x) {
  if (!(x >= 0.0)) throw std::invalid_argument("distance_at: x must be >= 0");
  return std::abs(f(x) - g(x));
}

}  // namespace bulgaria
