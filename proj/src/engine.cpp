#include "bulgaria/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bulgaria {

const char* variant_name(Variant v) noexcept {
  switch (v) {
    case Variant::deterministic: return "deterministic";
    case Variant::card_based: return "card";
    case Variant::pile_based: return "pile";
  }
  return "?";
}

Variant variant_from_name(std::string_view name) {
  if (name == "deterministic" || name == "det") return Variant::deterministic;
  if (name == "card" || name == "card_based") return Variant::card_based;
  if (name == "pile" || name == "pile_based") return Variant::pile_based;
  throw std::invalid_argument("unknown variant: " + std::string(name));
}

void validate(const GameParams& params) {
  if (params.n < 1) throw std::invalid_argument("GameParams: n must be >= 1");
  if (!(params.p >= 0.0 && params.p <= 1.0))
    throw std::invalid_argument("GameParams: p outside [0,1]");
}

Partition move_deterministic(const Partition& lambda) {
  std::vector<std::uint64_t> next;
  next.reserve(lambda.length() + 1);
  for (std::uint64_t part : lambda.parts())
    if (part > 1) next.push_back(part - 1);
  next.push_back(static_cast<std::uint64_t>(lambda.length()));
  return Partition::from_unsorted(std::move(next));
}

WeakComposition move_card_based(const WeakComposition& alpha, double p, Rng& rng) {
  const auto& bowls = alpha.parts();
  std::vector<std::uint64_t> next(bowls.size() + 1);
  std::uint64_t picked = 0;
  // Oldest bowl first; empty bowls consume no randomness.
  for (std::size_t i = bowls.size(); i-- > 0;) {
    std::uint64_t removed = bowls[i] > 0 ? binomial_sample(bowls[i], p, rng) : 0;
    next[i + 1] = bowls[i] - removed;
    picked += removed;
  }
  next[0] = picked;
  return WeakComposition{std::move(next)};
}

namespace {

Partition pile_move(const Partition& lambda, double p, Rng& rng, std::uint64_t& released) {
  std::vector<std::uint64_t> next;
  next.reserve(lambda.length() + 1);
  released = 0;
  for (std::uint64_t part : lambda.parts()) {
    if (rng.next_double() < p) {
      ++released;
      if (part > 1) next.push_back(part - 1);
    } else {
      next.push_back(part);
    }
  }
  if (released > 0) next.push_back(released);
  return Partition::from_unsorted(std::move(next));
}

}  // namespace

Partition move_pile_based(const Partition& lambda, double p, Rng& rng) {
  std::uint64_t released = 0;
  return pile_move(lambda, p, rng, released);
}

Partition triangular_start(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("triangular_start: n must be >= 1");
  std::uint64_t k = 0;
  while ((k + 1) * (k + 2) / 2 <= n) ++k;
  std::uint64_t rest = n - k * (k + 1) / 2;
  std::vector<std::uint64_t> parts(k);
  for (std::uint64_t i = 0; i < k; ++i) parts[i] = k - i + (i < rest ? 1 : 0);
  return Partition{std::move(parts)};
}

Partition random_partition(std::uint64_t n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("random_partition: n must be >= 1");
  const std::uint64_t piles = 1 + rng.next_u64() % n;
  std::vector<std::uint64_t> counts(piles, 0);
  for (std::uint64_t card = 0; card < n; ++card) ++counts[rng.next_u64() % piles];
  return Partition::from_unsorted(std::move(counts));
}

const WeakComposition& Trajectory::final_composition() const {
  if (composition_states.empty())
    throw std::logic_error("Trajectory: no composition states (not a card-based run)");
  return composition_states.back();
}

const Partition& Trajectory::final_partition() const {
  if (partition_states.empty())
    throw std::logic_error("Trajectory: no partition states (card-based run)");
  return partition_states.back();
}

CardChain::CardChain(const Partition& initial) {
  bowls_.assign(initial.parts().rbegin(), initial.parts().rend());
}

std::uint64_t CardChain::step(double p, Rng& rng) {
  std::uint64_t picked = 0;
  for (std::size_t i = first_live_; i < bowls_.size(); ++i) {
    if (bowls_[i] == 0) continue;
    std::uint64_t removed = binomial_sample(bowls_[i], p, rng);
    bowls_[i] -= removed;
    picked += removed;
  }
  bowls_.push_back(picked);
  ++rounds_;
  // Leading bowls stay empty forever once passed: cards never move into
  // an old bowl.
  while (first_live_ < bowls_.size() && bowls_[first_live_] == 0) ++first_live_;
  if (first_live_ > 4096 && first_live_ > bowls_.size() / 2) {
    bowls_.erase(bowls_.begin(), bowls_.begin() + static_cast<std::ptrdiff_t>(first_live_));
    dropped_ += first_live_;
    first_live_ = 0;
  }
  return picked;
}

std::uint64_t CardChain::bowl(std::uint64_t k) const noexcept {
  if (k < 1 || k > bowls_.size()) return 0;
  return bowls_[bowls_.size() - static_cast<std::size_t>(k)];
}

std::vector<std::uint64_t> CardChain::live_parts() const {
  std::vector<std::uint64_t> live;
  for (std::size_t i = bowls_.size(); i-- > first_live_;)
    if (bowls_[i] > 0) live.push_back(bowls_[i]);
  return live;
}

WeakComposition CardChain::composition() const {
  std::vector<std::uint64_t> parts(bowls_.rbegin(), bowls_.rend());
  parts.insert(parts.end(), static_cast<std::size_t>(dropped_), 0);
  return WeakComposition{std::move(parts)};
}

Trajectory play(const GameParams& params, const Partition& initial, std::uint64_t rounds,
                Recording recording) {
  validate(params);
  if (initial.n() != params.n)
    throw std::invalid_argument("play: initial state does not sum to params.n");

  Trajectory trajectory;
  trajectory.params = params;
  trajectory.rounds = rounds;
  trajectory.new_pile_sizes.reserve(rounds);
  Rng rng(params.master_seed);

  if (params.variant == Variant::card_based) {
    CardChain chain(initial);
    trajectory.composition_states.push_back(chain.composition());
    for (std::uint64_t r = 0; r < rounds; ++r) {
      trajectory.new_pile_sizes.push_back(chain.step(params.p, rng));
      if (recording == Recording::full) trajectory.composition_states.push_back(chain.composition());
    }
    if (recording == Recording::streaming && rounds > 0)
      trajectory.composition_states.push_back(chain.composition());
  } else {
    Partition state = initial;
    trajectory.partition_states.push_back(state);
    for (std::uint64_t r = 0; r < rounds; ++r) {
      std::uint64_t released = 0;
      if (params.variant == Variant::deterministic) {
        released = state.length();
        state = move_deterministic(state);
      } else {
        state = pile_move(state, params.p, rng, released);
      }
      trajectory.new_pile_sizes.push_back(released);
      if (recording == Recording::full) trajectory.partition_states.push_back(state);
    }
    if (recording == Recording::streaming && rounds > 0)
      trajectory.partition_states.push_back(state);
  }
  return trajectory;
}

}  // namespace bulgaria
