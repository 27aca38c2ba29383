#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hrchain/common/decimal.hpp"
#include "hrchain/consensus/miner_set.hpp"
#include "hrchain/ledger/block.hpp"

namespace hrchain::consensus {

/// Mining-diversity parameter d in [0, 1].
struct DiversityRule {
  Decimal diversity;

  /// Throws std::invalid_argument outside [0, 1].
  static DiversityRule of(Decimal d);
  static DiversityRule parse(std::string_view text);

  /// ceil(d * M): a miner may not produce a block if it produced any of the
  /// previous window - 1 non-genesis blocks.
  std::uint64_t window(std::size_t miner_count) const { return diversity.ceil_mul(miner_count); }

  /// Smallest number of active miners that keeps the chain growing:
  /// the diversity window, and at least two so a distinct validator exists.
  std::size_t liveness_threshold(std::size_t miner_count) const;
};

/// Miners allowed to produce the block at height chain.back().height + 1,
/// in registration order: permitted, active, and absent from the heights
/// [max(1, h - window + 1), h - 1]. Genesis never counts against a miner.
std::vector<ParticipantId> eligible_miners(std::span<const ledger::Block> chain,
                                           const MinerSet& miners, const DiversityRule& rule);
inline std::vector<ParticipantId> eligible_miners(const ledger::Chain& chain,
                                                  const MinerSet& miners,
                                                  const DiversityRule& rule) {
  return eligible_miners(chain.blocks(), miners, rule);
}

/// Round-robin proposer for `height`: miners[(height - 1) mod M], or the
/// next eligible miner in registration order after it. nullopt when
/// nobody is eligible.
std::optional<ParticipantId> designated_proposer(std::uint64_t height, const MinerSet& miners,
                                                 std::span<const ParticipantId> eligible);

/// Single validator for a block from `proposer`: the next active miner
/// after the proposer in registration order, wrapping, never the proposer.
std::optional<ParticipantId> designated_validator(const ParticipantId& proposer,
                                                  const MinerSet& miners);

}  // namespace hrchain::consensus
