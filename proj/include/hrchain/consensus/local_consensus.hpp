#pragma once

#include <map>
#include <vector>

#include "hrchain/consensus/approval.hpp"
#include "hrchain/consensus/diversity.hpp"
#include "hrchain/consensus/miner_set.hpp"
#include "hrchain/ledger/block.hpp"
#include "hrchain/registry/keys.hpp"

namespace hrchain::consensus {

/// In-process round-robin consensus holding every miner's keys.
///
/// One commit() call runs a whole round synchronously: pick the designated
/// proposer for the next height, build and sign the block, have the
/// designated validator approve it, append. The simulator drives the same
/// decision functions over messages instead.
class LocalConsensus {
 public:
  LocalConsensus(std::vector<registry::KeyPair> miner_keys, DiversityRule rule);

  const MinerSet& miners() const { return miners_; }
  const DiversityRule& rule() const { return rule_; }
  void set_active(const ParticipantId& miner, bool active) { miners_.set_active(miner, active); }

  /// Appends one block holding `transactions` at `timestamp` and returns it.
  /// Throws ConsensusError{ConsensusStalled} when no proposer or validator
  /// is available, ConsensusError{Rejected} if the validator refuses, and
  /// LedgerError for an empty list or a timestamp before the tip's.
  const ledger::Block& commit(ledger::Chain& chain, std::vector<ledger::Transaction> transactions,
                              std::uint64_t timestamp);

  /// Approval of the most recent commit().
  const Approval& last_approval() const { return last_approval_; }

 private:
  MinerSet miners_;
  DiversityRule rule_;
  std::map<ParticipantId, registry::KeyPair> keys_;
  Approval last_approval_;
};

}  // namespace hrchain::consensus
