#include "bulgaria/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace bulgaria {

namespace {

std::uint64_t checked_sum(const std::vector<std::uint64_t>& parts) {
  return std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
}

}  // namespace

Partition::Partition(std::vector<std::uint64_t> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
  n_ = checked_sum(parts_);
}

Partition Partition::from_unsorted(std::vector<std::uint64_t> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  while (!values.empty() && values.back() == 0) values.pop_back();
  Partition result;
  result.parts_ = std::move(values);
  result.n_ = checked_sum(result.parts_);
  return result;
}

WeakComposition::WeakComposition(std::vector<std::uint64_t> parts)
    : parts_(std::move(parts)), n_(checked_sum(parts_)) {}

Partition ord(const WeakComposition& alpha) {
  return Partition::from_unsorted(alpha.parts());
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  // FNV-1a over the part values.
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (std::uint64_t part : p.parts()) {
    h ^= part;
    h *= 0x100000001b3ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace bulgaria
