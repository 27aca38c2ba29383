#include "hrchain/ledger/validation.hpp"

#include <set>
#include <utility>

#include "hrchain/ledger/merkle.hpp"
#include "hrchain/registry/keys.hpp"

namespace hrchain::ledger {

std::string_view to_string(ValidationErrc code) {
  switch (code) {
    case ValidationErrc::BadLink: return "BadLink";
    case ValidationErrc::BadTimestamp: return "BadTimestamp";
    case ValidationErrc::BadMerkleRoot: return "BadMerkleRoot";
    case ValidationErrc::BadCount: return "BadCount";
    case ValidationErrc::BadSignature: return "BadSignature";
    case ValidationErrc::UnpermittedMiner: return "UnpermittedMiner";
    case ValidationErrc::DiversityViolation: return "DiversityViolation";
    case ValidationErrc::ReplayedTransaction: return "ReplayedTransaction";
    case ValidationErrc::BadGenesis: return "BadGenesis";
  }
  return "ValidationError";
}

namespace {

using NonceKey = std::pair<ParticipantId, std::uint64_t>;

bool merkle_matches(const Block& block) {
  if (block.transactions.empty()) return false;
  return merkle_root(block.transactions) == block.header.merkle_root;
}

bool signatures_valid(const Block& block) {
  if (!registry::verify_signed_by(block.header.miner, encode_header(block.header),
                                  block.miner_signature)) {
    return false;
  }
  for (const auto& tx : block.transactions) {
    if (!verify_transaction(tx)) return false;
  }
  return true;
}

// `seen` holds (author, nonce) pairs of every block in `history`.
std::optional<ValidationErrc> check_child(const Block& block, std::span<const Block> history,
                                          const consensus::DiversityRule& rule,
                                          const consensus::MinerSet& miners,
                                          const std::set<NonceKey>& seen) {
  if (history.empty()) return ValidationErrc::BadLink;
  const Block& parent = history.back();
  const auto& h = block.header;
  if (h.version != kBlockVersion || h.height != parent.header.height + 1 ||
      h.prev_hash != block_id(parent)) {
    return ValidationErrc::BadLink;
  }
  if (h.timestamp < parent.header.timestamp) return ValidationErrc::BadTimestamp;
  if (!merkle_matches(block)) return ValidationErrc::BadMerkleRoot;
  if (block.tx_count != block.transactions.size() || block.tx_count == 0) {
    return ValidationErrc::BadCount;
  }
  if (!signatures_valid(block)) return ValidationErrc::BadSignature;
  if (!miners.contains(h.miner)) return ValidationErrc::UnpermittedMiner;

  auto eligible = consensus::eligible_miners(history, miners.all_active(), rule);
  if (std::find(eligible.begin(), eligible.end(), h.miner) == eligible.end()) {
    return ValidationErrc::DiversityViolation;
  }

  std::set<NonceKey> in_block;
  for (const auto& tx : block.transactions) {
    NonceKey key{tx.author, tx.nonce};
    if (seen.contains(key) || !in_block.insert(key).second) {
      return ValidationErrc::ReplayedTransaction;
    }
  }
  return std::nullopt;
}

void record_nonces(const Block& block, std::set<NonceKey>& seen) {
  for (const auto& tx : block.transactions) seen.emplace(tx.author, tx.nonce);
}

}  // namespace

std::optional<ValidationErrc> validate_block(const Block& block, std::span<const Block> history,
                                             const consensus::DiversityRule& rule,
                                             const consensus::MinerSet& miners) {
  std::set<NonceKey> seen;
  for (const auto& b : history) record_nonces(b, seen);
  return check_child(block, history, rule, miners, seen);
}

std::optional<ValidationErrc> validate_genesis(const Block& genesis,
                                               const consensus::MinerSet& miners) {
  const auto& h = genesis.header;
  if (h.version != kBlockVersion || h.height != 0 || !h.prev_hash.is_zero()) {
    return ValidationErrc::BadGenesis;
  }
  if (!merkle_matches(genesis)) return ValidationErrc::BadMerkleRoot;
  if (genesis.tx_count != genesis.transactions.size() || genesis.tx_count != 1) {
    return ValidationErrc::BadCount;
  }
  if (genesis.transactions.front().kind != TxKind::PermissionGrant) {
    return ValidationErrc::BadGenesis;
  }
  if (!signatures_valid(genesis)) return ValidationErrc::BadSignature;
  if (!miners.contains(h.miner)) return ValidationErrc::UnpermittedMiner;
  return std::nullopt;
}

std::optional<ChainFault> validate_chain(const Chain& chain, const consensus::DiversityRule& rule,
                                         const consensus::MinerSet& miners) {
  if (chain.empty()) return ChainFault{0, ValidationErrc::BadGenesis};
  if (auto err = validate_genesis(chain.genesis(), miners)) return ChainFault{0, *err};

  std::set<NonceKey> seen;
  record_nonces(chain.genesis(), seen);
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const Block& block = chain.at(i);
    if (auto err = check_child(block, chain.prefix(i), rule, miners, seen)) {
      return ChainFault{i, *err};
    }
    record_nonces(block, seen);
  }
  return std::nullopt;
}

}  // namespace hrchain::ledger
