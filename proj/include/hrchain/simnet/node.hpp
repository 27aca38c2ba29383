#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hrchain/consensus/miner_set.hpp"
#include "hrchain/ledger/block.hpp"
#include "hrchain/recruit/ranking.hpp"
#include "hrchain/recruit/requirement.hpp"
#include "hrchain/recruit/verification.hpp"
#include "hrchain/registry/roster.hpp"

namespace hrchain::simnet {

/// Block this node proposed and is waiting to see approved.
struct PendingProposal {
  std::uint64_t height = 0;
  ledger::Digest block_id;
  registry::ParticipantId validator;
};

/// Ranking round a company is collecting verdicts for.
struct RankRound {
  std::uint64_t id = 0;
  std::size_t step = 0;
  registry::ParticipantId company;
  std::vector<recruit::ApplicantProfile> profiles;
  std::vector<std::vector<std::optional<recruit::VerificationRecord>>> records;
  std::size_t outstanding = 0;
};

/// One simulated machine. It owns its chain and local stores and talks to
/// other nodes only through the simulator's message queue.
struct SimNode {
  std::string name;
  registry::Role role = registry::Role::Applicant;
  registry::ParticipantId id;
  /// Keys of every identity this node acts for: its own first, then hosted
  /// identities in roster order.
  std::map<registry::ParticipantId, registry::KeyPair> keys;

  ledger::Chain chain;
  std::set<ledger::Digest> committed_txs;
  consensus::MinerSet miners;
  std::vector<ledger::Transaction> mempool;  // arrival order
  std::optional<PendingProposal> pending;
  std::map<registry::ParticipantId, std::uint64_t> next_nonce;

  // Application state.
  std::map<registry::ParticipantId, recruit::AuthorityStore> authority_stores;
  std::map<registry::ParticipantId, recruit::ApplicantProfile> own_profiles;
  // Per company, in order of each applicant's first submission.
  std::map<registry::ParticipantId, std::vector<recruit::ApplicantProfile>> received_profiles;
  std::map<registry::ParticipantId, recruit::RequirementSpec> specs;
  std::map<registry::ParticipantId, recruit::RankedList> latest_ranking;
  std::optional<RankRound> round;

  explicit SimNode(consensus::MinerSet m) : miners(std::move(m)) {}

  bool acts_for(const registry::ParticipantId& identity) const { return keys.contains(identity); }
};

/// Adds a transaction unless it is committed or already queued.
bool add_to_mempool(SimNode& node, const ledger::Transaction& tx);

/// Appends a block already checked against the tip and drops its
/// transactions from the mempool.
void append_block(SimNode& node, ledger::Block block);

/// Replaces the node's chain; transactions only the old chain had go back
/// to the mempool.
void adopt_chain(SimNode& node, ledger::Chain chain);

/// Next block's transactions in arrival order: one ContractRecord alone
/// (several when batching), otherwise up to `max_txs` other records.
std::vector<ledger::Transaction> select_transactions(const SimNode& node, bool batch_contracts,
                                                     std::size_t max_txs);

/// Next unused nonce for an identity the node acts for.
std::uint64_t take_nonce(SimNode& node, const registry::ParticipantId& identity);

}  // namespace hrchain::simnet
