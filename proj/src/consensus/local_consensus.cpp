#include "hrchain/consensus/local_consensus.hpp"

#include "hrchain/ledger/validation.hpp"

namespace hrchain::consensus {

namespace {
std::vector<ParticipantId> ids_of(const std::vector<registry::KeyPair>& keys) {
  std::vector<ParticipantId> ids;
  ids.reserve(keys.size());
  for (const auto& k : keys) ids.push_back(k.id());
  return ids;
}
}  // namespace

LocalConsensus::LocalConsensus(std::vector<registry::KeyPair> miner_keys, DiversityRule rule)
    : miners_(ids_of(miner_keys)), rule_(rule) {
  for (auto& k : miner_keys) keys_.emplace(k.id(), std::move(k));
}

const ledger::Block& LocalConsensus::commit(ledger::Chain& chain,
                                            std::vector<ledger::Transaction> transactions,
                                            std::uint64_t timestamp) {
  const std::uint64_t height = chain.height() + 1;
  auto eligible = eligible_miners(chain, miners_, rule_);
  auto proposer = designated_proposer(height, miners_, eligible);
  if (!proposer) {
    throw ConsensusError(ConsensusErrc::ConsensusStalled,
                         "no eligible miner at height " + std::to_string(height));
  }
  auto validator = designated_validator(*proposer, miners_);
  if (!validator) {
    throw ConsensusError(ConsensusErrc::ConsensusStalled,
                         "no validator available at height " + std::to_string(height));
  }

  auto block = ledger::build_block(chain.tip(), std::move(transactions), *proposer, timestamp);
  ledger::sign_block(block, keys_.at(*proposer));

  auto outcome = approve_block(block, keys_.at(*validator), chain.blocks(), rule_, miners_);
  if (const auto* rejection = std::get_if<Rejection>(&outcome)) {
    std::string detail = rejection->cause ? std::string(ledger::to_string(*rejection->cause))
                                          : std::string(to_string(rejection->code));
    throw ConsensusError(ConsensusErrc::Rejected, detail);
  }
  last_approval_ = std::get<Approval>(outcome);
  chain.push_back(std::move(block));
  return chain.tip();
}

}  // namespace hrchain::consensus
