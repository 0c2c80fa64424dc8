#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "bulgaria/partition.hpp"

namespace bulgaria {

/// All partitions of n in reverse-lexicographic order ((n) first,
/// (1,...,1) last) with partition <-> index lookup. Desk-scale oracle:
/// enumeration is capped so pick-vector sums stay cheap.
class PartitionIndex {
 public:
  static constexpr std::uint64_t kDefaultCap = 14;

  std::uint64_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return states_.size(); }
  const Partition& partition(std::size_t i) const { return states_.at(i); }
  std::size_t index_of(const Partition& p) const;

  friend PartitionIndex enumerate_partitions(std::uint64_t n, std::uint64_t cap);

 private:
  std::uint64_t n_ = 0;
  std::vector<Partition> states_;
  std::unordered_map<Partition, std::size_t, PartitionHash> lookup_;
};

PartitionIndex enumerate_partitions(std::uint64_t n,
                                    std::uint64_t cap = PartitionIndex::kDefaultCap);

/// Dense row-major square matrix, just big enough for the oracle.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t size) : size_(size), data_(size * size, 0.0) {}

  std::size_t size() const noexcept { return size_; }
  double& at(std::size_t row, std::size_t col) { return data_[row * size_ + col]; }
  double at(std::size_t row, std::size_t col) const { return data_[row * size_ + col]; }
  double row_sum(std::size_t row) const;

 private:
  std::size_t size_ = 0;
  std::vector<double> data_;
};

/// Probability vector aligned with a PartitionIndex.
struct DistributionVector {
  std::vector<double> probs;

  /// Entries >= 0 and total within 1e-12 of 1.
  void validate() const;
};

/// Exact one-round transition probability of the card-based game: sum of
/// the multinomial pick-vector probabilities that carry `from` to `to`.
double transition_probability(const Partition& from, const Partition& to, double p);

/// Row-stochastic matrix over the index order.
Matrix transition_matrix(const PartitionIndex& index, double p);

/// Unique stationary vector via the linear system (replace one balance
/// equation with normalization). Requires p in (0,1).
DistributionVector stationary_exact(const Matrix& transition);

/// Independent route: repeated application of the transition matrix.
DistributionVector stationary_power_iteration(const Matrix& transition, double tol = 1e-13,
                                              std::size_t max_iters = 500000);

/// max_j |(pi T)_j - pi_j|.
double stationary_residual(const Matrix& transition, const DistributionVector& pi);

double total_variation(const DistributionVector& a, const DistributionVector& b);

bool positive_diagonal(const Matrix& transition);

/// Strong connectivity of the directed graph of nonzero entries.
bool strongly_connected(const Matrix& transition);

}  // namespace bulgaria
