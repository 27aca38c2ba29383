#include "hrchain/consensus/approval.hpp"

namespace hrchain::consensus {

Bytes approval_message(const ledger::Digest& block_id, const ParticipantId& validator) {
  ByteWriter w;
  w.str16("hrchain/approval");
  w.raw(block_id.view());
  w.raw(validator.value.view());
  return std::move(w).take();
}

ApprovalOutcome approve_block(const ledger::Block& block, const registry::KeyPair& validator,
                              std::span<const ledger::Block> history, const DiversityRule& rule,
                              const MinerSet& miners) {
  if (validator.id() == block.header.miner) return Rejection{ConsensusErrc::SelfValidation, {}};
  if (!miners.contains(validator.id())) return Rejection{ConsensusErrc::UnpermittedValidator, {}};
  if (auto err = ledger::validate_block(block, history, rule, miners)) {
    return Rejection{ConsensusErrc::Rejected, *err};
  }
  auto id = ledger::block_id(block);
  return Approval{id, validator.id(), registry::sign(validator, approval_message(id, validator.id()))};
}

bool verify_approval(const Approval& approval, const ledger::Block& block, const MinerSet& miners) {
  if (approval.block_id != ledger::block_id(block)) return false;
  if (approval.validator == block.header.miner || !miners.contains(approval.validator)) return false;
  return registry::verify_signed_by(approval.validator,
                                    approval_message(approval.block_id, approval.validator),
                                    approval.signature);
}

}  // namespace hrchain::consensus
