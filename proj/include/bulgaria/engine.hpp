#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "bulgaria/partition.hpp"
#include "bulgaria/rng.hpp"

namespace bulgaria {

enum class Variant { deterministic, card_based, pile_based };

const char* variant_name(Variant v) noexcept;
Variant variant_from_name(std::string_view name);

/// Full specification of a reproducible run. The deterministic variant
/// ignores p and the seed, but the fields must still be in domain.
struct GameParams {
  std::uint64_t n = 1;
  double p = 0.5;
  Variant variant = Variant::card_based;
  std::uint64_t master_seed = 0;
};

void validate(const GameParams& params);

/// One deterministic round: every pile releases a card, the released
/// cards form a new pile.
Partition move_deterministic(const Partition& lambda);

/// One card-based round: every nonempty bowl k loses a Binomial(part_k, p)
/// draw and the removed cards fill a fresh bowl in front (kept even when
/// empty). Bowls are visited oldest first so that play() and repeated
/// calls of this function consume the random stream identically.
WeakComposition move_card_based(const WeakComposition& alpha, double p, Rng& rng);

/// One pile-based round: each pile independently releases one card with
/// probability p (piles visited largest first); the released cards form
/// a new pile, dropped when empty.
Partition move_pile_based(const Partition& lambda, double p, Rng& rng);

/// (k, k-1, ..., 1) for the largest k with k(k+1)/2 <= n; the n - k(k+1)/2
/// leftover cards go one each onto the largest piles.
Partition triangular_start(std::uint64_t n);

/// Random initial configuration: pile count uniform in [1, n], each card
/// assigned to a pile uniformly, empty piles dropped.
Partition random_partition(std::uint64_t n, Rng& rng);

/// Incrementally played card-based game. One step is an in-place scan of
/// the live bowls, so long chains cost O(live bowls) per round instead of
/// a fresh allocation. Bowls that emptied before every younger bowl can
/// never refill and are compacted away; the composition view restores
/// them as trailing zeros.
class CardChain {
 public:
  explicit CardChain(const Partition& initial);

  /// Plays one round; returns the new pile size.
  std::uint64_t step(double p, Rng& rng);

  std::uint64_t rounds() const noexcept { return rounds_; }
  std::uint64_t total_bowls() const noexcept { return bowls_.size() + dropped_; }

  /// alpha_k, counted from the most recent bowl; 0 beyond the stored range.
  std::uint64_t bowl(std::uint64_t k) const noexcept;

  /// The nonzero bowl values, newest first.
  std::vector<std::uint64_t> live_parts() const;

  /// Full composition including trailing empty bowls.
  WeakComposition composition() const;

 private:
  std::vector<std::uint64_t> bowls_;  // oldest first
  std::size_t first_live_ = 0;
  std::uint64_t dropped_ = 0;
  std::uint64_t rounds_ = 0;
};

enum class Recording {
  full,       // every state, round by round
  streaming,  // initial and final state only (per-round pile sizes stay)
};

/// A played game. Card-based trajectories live in composition_states,
/// the other variants in partition_states; the unused vector stays
/// empty. Under full recording the populated vector has rounds + 1
/// entries; streaming keeps only {initial, final}.
struct Trajectory {
  GameParams params;
  std::uint64_t rounds = 0;
  std::vector<Partition> partition_states;
  std::vector<WeakComposition> composition_states;
  std::vector<std::uint64_t> new_pile_sizes;  // one entry per round

  const WeakComposition& final_composition() const;
  const Partition& final_partition() const;
};

/// Plays `rounds` rounds of params.variant from `initial`. Pure function
/// of its arguments: identical inputs give bit-identical trajectories.
Trajectory play(const GameParams& params, const Partition& initial, std::uint64_t rounds,
                Recording recording = Recording::full);

}  // namespace bulgaria
