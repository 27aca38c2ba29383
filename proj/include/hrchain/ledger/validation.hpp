#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "hrchain/consensus/diversity.hpp"
#include "hrchain/consensus/miner_set.hpp"
#include "hrchain/ledger/block.hpp"

namespace hrchain::ledger {

enum class ValidationErrc {
  BadLink,
  BadTimestamp,
  BadMerkleRoot,
  BadCount,
  BadSignature,
  UnpermittedMiner,
  DiversityViolation,
  ReplayedTransaction,
  BadGenesis,
};

std::string_view to_string(ValidationErrc code);

/// Checks `block` as the child of history.back(), in order: hash linkage
/// (version, height, prev_hash), timestamp, Merkle root, tx_count, miner and
/// author signatures, miner permission, diversity eligibility, and
/// (author, nonce) replay against `history`. Returns the first failure.
///
/// Activity flags in `miners` are ignored: a validator cannot observe
/// whether the producer was considered active elsewhere.
std::optional<ValidationErrc> validate_block(const Block& block, std::span<const Block> history,
                                             const consensus::DiversityRule& rule,
                                             const consensus::MinerSet& miners);

/// Structural check of a height-0 block: zero prev_hash, one signed
/// PermissionGrant, correct Merkle root and count, signed by a permitted
/// miner.
std::optional<ValidationErrc> validate_genesis(const Block& genesis,
                                               const consensus::MinerSet& miners);

struct ChainFault {
  std::uint64_t height = 0;
  ValidationErrc error = ValidationErrc::BadLink;
  friend bool operator==(const ChainFault&, const ChainFault&) = default;
};

/// First failing position, tagged with its height (the block index).
std::optional<ChainFault> validate_chain(const Chain& chain, const consensus::DiversityRule& rule,
                                         const consensus::MinerSet& miners);

}  // namespace hrchain::ledger
