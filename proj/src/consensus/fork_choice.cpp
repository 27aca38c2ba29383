#include "hrchain/consensus/fork_choice.hpp"

#include "hrchain/ledger/validation.hpp"

namespace hrchain::consensus {

bool preferred(const ledger::Chain& a, const ledger::Chain& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  if (a.empty()) return false;
  return ledger::block_id(a.tip()) < ledger::block_id(b.tip());
}

const ledger::Chain& fork_choice(std::span<const ledger::Chain> candidates,
                                 const DiversityRule& rule, const MinerSet& miners) {
  const ledger::Chain* best = nullptr;
  for (const auto& c : candidates) {
    if (ledger::validate_chain(c, rule, miners)) continue;
    if (best == nullptr || preferred(c, *best)) best = &c;
  }
  if (best == nullptr) throw ConsensusError(ConsensusErrc::NoValidCandidate);
  return *best;
}

}  // namespace hrchain::consensus
