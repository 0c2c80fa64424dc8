#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "bulgaria/partition.hpp"

namespace bulgaria {

/// Right-continuous piecewise-constant function on [0, inf) with finite
/// support. Segment i carries values()[i] on [breaks()[i], breaks()[i+1]);
/// the function is identically 0 from support_end() on. A default
/// constructed instance is the zero function.
class StepFunction {
 public:
  StepFunction() = default;
  /// breaks must be strictly increasing, start at 0 and have exactly one
  /// more entry than values (the final entry closes the last segment).
  StepFunction(std::vector<double> breaks, std::vector<double> values);

  double operator()(double x) const;

  std::size_t segment_count() const noexcept { return values_.size(); }
  const std::vector<double>& breaks() const noexcept { return breaks_; }
  const std::vector<double>& values() const noexcept { return values_; }
  double support_end() const noexcept { return breaks_.empty() ? 0.0 : breaks_.back(); }

  double area() const;
  bool weakly_decreasing() const;

 private:
  std::vector<double> breaks_;  // empty or size values_.size() + 1
  std::vector<double> values_;
};

/// Diagram-boundary function: unit-width segments, segment k (0-based)
/// at height part k+1. Trailing zero piles of a composition are
/// truncated; interior zeros stay as zero-valued segments.
StepFunction boundary(const Partition& lambda);
StepFunction boundary(const WeakComposition& alpha);

/// a-rescaling: widths shrink by 1/a, heights scale by a/n, so the
/// boundary of a size-n object encloses unit area. Rejects a <= 0 and
/// n == 0.
StepFunction rescale(const StepFunction& f, double a, std::uint64_t n);

/// Reference curve for the distance computations: evaluable anywhere on
/// [0, inf), continuous, weakly decreasing, vanishing at infinity. The
/// monotonicity flag is declared by the constructor; the distance
/// routines reject references without it.
class DecreasingReference {
 public:
  DecreasingReference(std::function<double(double)> eval, bool weakly_decreasing);

  static DecreasingReference exponential();  // e^{-x}
  static DecreasingReference scaled_exponential(double scale, double rate);
  static DecreasingReference zero();

  double operator()(double x) const { return eval_(x); }
  bool is_weakly_decreasing() const noexcept { return weakly_decreasing_; }

 private:
  std::function<double(double)> eval_;
  bool weakly_decreasing_;
};

/// Exact sup of |f(x) - g(x)| over x >= 0. Monotonicity and continuity
/// of g reduce each segment to its two endpoint evaluations; the tail
/// beyond the support contributes g(support_end()).
double sup_distance(const StepFunction& f, const DecreasingReference& g);

/// Exact sup distance between two step functions (breakpoint merge; no
/// monotonicity needed).
double sup_distance(const StepFunction& f, const StepFunction& g);

/// Sup of |f - g| over the compact interval [lo, hi] (hi may be
/// infinity, which recovers sup_distance). Rejects hi < lo or lo < 0.
double restricted_distance(const StepFunction& f, const DecreasingReference& g,
                           double lo, double hi);

/// Pointwise variant: |f(x) - g(x)|.
double distance_at(const StepFunction& f, const DecreasingReference& g, double x);

}  // namespace bulgaria
