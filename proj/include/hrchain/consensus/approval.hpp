#pragma once

#include <optional>
#include <span>
#include <variant>

#include "hrchain/consensus/diversity.hpp"
#include "hrchain/consensus/miner_set.hpp"
#include "hrchain/ledger/block.hpp"
#include "hrchain/ledger/validation.hpp"
#include "hrchain/registry/keys.hpp"

namespace hrchain::consensus {

/// A validator's signed statement that a block passed validation.
struct Approval {
  ledger::Digest block_id;
  ParticipantId validator;
  registry::Signature signature;

  friend bool operator==(const Approval&, const Approval&) = default;
};

struct Rejection {
  ConsensusErrc code = ConsensusErrc::Rejected;
  /// Set when code == Rejected.
  std::optional<ledger::ValidationErrc> cause;

  friend bool operator==(const Rejection&, const Rejection&) = default;
};

using ApprovalOutcome = std::variant<Approval, Rejection>;

Bytes approval_message(const ledger::Digest& block_id, const ParticipantId& validator);

/// Single-validator approval. The validator must be a permitted miner other
/// than the block's miner; the block is checked against `history` (whose
/// last element is the parent) with ledger::validate_block.
ApprovalOutcome approve_block(const ledger::Block& block, const registry::KeyPair& validator,
                              std::span<const ledger::Block> history, const DiversityRule& rule,
                              const MinerSet& miners);

/// Signature and role check of an approval received with a committed block.
bool verify_approval(const Approval& approval, const ledger::Block& block, const MinerSet& miners);

}  // namespace hrchain::consensus
