#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bulgaria {

/// Integer partition: weakly decreasing positive parts. The empty
/// partition is the unique partition of 0. Parts are addressed 1-based
/// and read as 0 beyond the last stored part.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<std::uint64_t> parts);

  /// Sorts arbitrary nonnegative values descending and drops zeros.
  static Partition from_unsorted(std::vector<std::uint64_t> values);

  const std::vector<std::uint64_t>& parts() const noexcept { return parts_; }
  std::uint64_t n() const noexcept { return n_; }
  std::size_t length() const noexcept { return parts_.size(); }

  std::uint64_t part(std::size_t i) const noexcept {
    return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
  }

  bool operator==(const Partition&) const = default;

 private:
  std::vector<std::uint64_t> parts_;
  std::uint64_t n_ = 0;
};

/// Pile sequence ordered by creation time, index 1 being the most
/// recent pile. Zeros are legal anywhere and are kept; indices past the
/// stored length read as empty piles.
class WeakComposition {
 public:
  WeakComposition() = default;
  explicit WeakComposition(std::vector<std::uint64_t> parts);

  const std::vector<std::uint64_t>& parts() const noexcept { return parts_; }
  std::uint64_t n() const noexcept { return n_; }
  std::size_t stored_length() const noexcept { return parts_.size(); }

  std::uint64_t part(std::size_t k) const noexcept {
    return (k >= 1 && k <= parts_.size()) ? parts_[k - 1] : 0;
  }

  bool operator==(const WeakComposition&) const = default;

 private:
  std::vector<std::uint64_t> parts_;
  std::uint64_t n_ = 0;
};

/// Sorts the parts descending and drops zeros; the sum is preserved.
Partition ord(const WeakComposition& alpha);

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

}  // namespace bulgaria
