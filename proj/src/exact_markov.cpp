#include "bulgaria/exact_markov.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace bulgaria {

std::size_t PartitionIndex::index_of(const Partition& p) const {
  auto it = lookup_.find(p);
  if (it == lookup_.end())
    throw std::invalid_argument("PartitionIndex: partition not in index (wrong n?)");
  return it->second;
}

namespace {

void emit_partitions(std::uint64_t remaining, std::uint64_t max_part,
                     std::vector<std::uint64_t>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  // Largest first part first: yields reverse-lexicographic order.
  for (std::uint64_t part = std::min(max_part, remaining); part >= 1; --part) {
    prefix.push_back(part);
    emit_partitions(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

PartitionIndex enumerate_partitions(std::uint64_t n, std::uint64_t cap) {
  if (n < 1) throw std::invalid_argument("enumerate_partitions: n must be >= 1");
  if (n > cap) throw std::invalid_argument("enumerate_partitions: n exceeds the oracle cap");
  PartitionIndex index;
  index.n_ = n;
  std::vector<std::uint64_t> prefix;
  emit_partitions(n, n, prefix, index.states_);
  index.lookup_.reserve(index.states_.size());
  for (std::size_t i = 0; i < index.states_.size(); ++i) index.lookup_[index.states_[i]] = i;
  return index;
}

double Matrix::row_sum(std::size_t row) const {
  double total = 0.0;
  for (std::size_t col = 0; col < size_; ++col) total += at(row, col);
  return total;
}

void DistributionVector::validate() const {
  double total = 0.0;
  for (double v : probs) {
    if (!(v >= 0.0)) throw std::invalid_argument("DistributionVector: negative entry");
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("DistributionVector: entries do not sum to 1");
}

namespace {

// Walks every pick vector (k_1,...,k_l), 0 <= k_i <= lambda_i, weighting
// each by its product of binomial pick probabilities, and hands the
// resulting sorted state to `accept`. Cost is prod(lambda_i + 1).
template <typename Accept>
void for_each_outcome(const Partition& from, double p, Accept&& accept) {
  const auto& parts = from.parts();
  const std::size_t len = parts.size();

  // pick_prob[i][k] = C(lambda_i, k) p^k (1-p)^{lambda_i - k}
  std::vector<std::vector<double>> pick_prob(len);
  for (std::size_t i = 0; i < len; ++i) {
    const std::uint64_t size = parts[i];
    auto& row = pick_prob[i];
    row.resize(size + 1);
    for (std::uint64_t k = 0; k <= size; ++k) {
      double binom = 1.0;
      for (std::uint64_t j = 0; j < k; ++j)
        binom = binom * static_cast<double>(size - j) / static_cast<double>(j + 1);
      row[k] = binom * std::pow(p, static_cast<double>(k)) *
               std::pow(1.0 - p, static_cast<double>(size - k));
    }
  }

  std::vector<std::uint64_t> picks(len, 0);
  std::vector<std::uint64_t> next;
  next.reserve(len + 1);
  for (;;) {
    double weight = 1.0;
    std::uint64_t moved = 0;
    for (std::size_t i = 0; i < len; ++i) {
      weight *= pick_prob[i][picks[i]];
      moved += picks[i];
    }
    next.clear();
    for (std::size_t i = 0; i < len; ++i)
      if (parts[i] > picks[i]) next.push_back(parts[i] - picks[i]);
    if (moved > 0) next.push_back(moved);
    accept(Partition::from_unsorted(next), weight);

    // Odometer increment over the pick vectors.
    std::size_t pos = 0;
    while (pos < len && picks[pos] == parts[pos]) picks[pos++] = 0;
    if (pos == len) break;
    ++picks[pos];
  }
}

}  // namespace

double transition_probability(const Partition& from, const Partition& to, double p) {
  if (from.n() != to.n()) throw std::invalid_argument("transition_probability: size mismatch");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("transition_probability: p outside [0,1]");
  double total = 0.0;
  for_each_outcome(from, p, [&](const Partition& result, double weight) {
    if (result == to) total += weight;
  });
  return total;
}

Matrix transition_matrix(const PartitionIndex& index, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("transition_matrix: p outside [0,1]");
  Matrix t(index.size());
  for (std::size_t row = 0; row < index.size(); ++row) {
    for_each_outcome(index.partition(row), p, [&](const Partition& result, double weight) {
      t.at(row, index.index_of(result)) += weight;
    });
  }
  return t;
}

DistributionVector stationary_exact(const Matrix& transition) {
  const std::size_t size = transition.size();
  if (size == 0) throw std::invalid_argument("stationary_exact: empty matrix");
  // pi T = pi  <=>  (T' - I) pi' = 0; first equation swapped for sum = 1.
  Eigen::MatrixXd a(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = transition.at(j, i);
  a -= Eigen::MatrixXd::Identity(size, size);
  a.row(0).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(size);
  rhs(0) = 1.0;
  Eigen::VectorXd pi = a.partialPivLu().solve(rhs);
  if (!pi.allFinite()) throw std::runtime_error("stationary_exact: solver failure");

  DistributionVector result;
  result.probs.assign(pi.data(), pi.data() + size);
  for (double& v : result.probs) v = std::max(v, 0.0);  // clip solver dust
  double total = 0.0;
  for (double v : result.probs) total += v;
  for (double& v : result.probs) v /= total;
  result.validate();
  return result;
}

DistributionVector stationary_power_iteration(const Matrix& transition, double tol,
                                              std::size_t max_iters) {
  const std::size_t size = transition.size();
  if (size == 0) throw std::invalid_argument("stationary_power_iteration: empty matrix");
  std::vector<double> pi(size, 1.0 / static_cast<double>(size));
  std::vector<double> next(size);
  for (std::size_t iter = 0; iter < max_iters; ++iter) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t i = 0; i < size; ++i) {
      const double weight = pi[i];
      if (weight == 0.0) continue;
      for (std::size_t j = 0; j < size; ++j) next[j] += weight * transition.at(i, j);
    }
    double diff = 0.0;
    for (std::size_t j = 0; j < size; ++j) diff = std::max(diff, std::abs(next[j] - pi[j]));
    pi.swap(next);
    if (diff <= tol) break;
  }
  DistributionVector result;
  result.probs = std::move(pi);
  result.validate();
  return result;
}

double stationary_residual(const Matrix& transition, const DistributionVector& pi) {
  const std::size_t size = transition.size();
  if (pi.probs.size() != size) throw std::invalid_argument("stationary_residual: size mismatch");
  double residual = 0.0;
  for (std::size_t j = 0; j < size; ++j) {
    double image = 0.0;
    for (std::size_t i = 0; i < size; ++i) image += pi.probs[i] * transition.at(i, j);
    residual = std::max(residual, std::abs(image - pi.probs[j]));
  }
  return residual;
}

double total_variation(const DistributionVector& a, const DistributionVector& b) {
  if (a.probs.size() != b.probs.size())
    throw std::invalid_argument("total_variation: distributions over different indices");
  double total = 0.0;
  for (std::size_t i = 0; i < a.probs.size(); ++i) total += std::abs(a.probs[i] - b.probs[i]);
  return 0.5 * total;
}

bool positive_diagonal(const Matrix& transition) {
  for (std::size_t i = 0; i < transition.size(); ++i)
    if (!(transition.at(i, i) > 0.0)) return false;
  return true;
}

namespace {

bool reaches_all(const Matrix& t, bool transpose) {
  const std::size_t size = t.size();
  std::vector<bool> seen(size, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const std::size_t node = stack.back();
    stack.pop_back();
    for (std::size_t next = 0; next < size; ++next) {
      const double edge = transpose ? t.at(next, node) : t.at(node, next);
      if (edge > 0.0 && !seen[next]) {
        seen[next] = true;
        stack.push_back(next);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace

bool strongly_connected(const Matrix& transition) {
  if (transition.size() == 0) return false;
  return reaches_all(transition, false) && reaches_all(transition, true);
}

}  // namespace bulgaria
