#include "hrchain/consensus/miner_set.hpp"

#include <algorithm>
#include <set>

namespace hrchain::consensus {

std::string_view to_string(ConsensusErrc code) {
  switch (code) {
    case ConsensusErrc::EmptyMinerSet: return "EmptyMinerSet";
    case ConsensusErrc::DuplicateMiner: return "DuplicateMiner";
    case ConsensusErrc::SelfValidation: return "SelfValidation";
    case ConsensusErrc::UnpermittedValidator: return "UnpermittedValidator";
    case ConsensusErrc::ConsensusStalled: return "ConsensusStalled";
    case ConsensusErrc::Rejected: return "Rejected";
    case ConsensusErrc::NoValidCandidate: return "NoValidCandidate";
  }
  return "ConsensusError";
}

MinerSet::MinerSet(std::vector<ParticipantId> miners) {
  if (miners.empty()) throw ConsensusError(ConsensusErrc::EmptyMinerSet);
  std::set<ParticipantId> seen;
  for (auto& id : miners) {
    if (!seen.insert(id).second) throw ConsensusError(ConsensusErrc::DuplicateMiner, id.short_hex());
    members_.push_back(Member{id, true});
  }
}

std::optional<std::size_t> MinerSet::index_of(const ParticipantId& id) const {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].id == id) return i;
  }
  return std::nullopt;
}

bool MinerSet::is_active(const ParticipantId& id) const {
  auto idx = index_of(id);
  return idx && members_[*idx].active;
}

std::size_t MinerSet::active_count() const {
  return static_cast<std::size_t>(
      std::count_if(members_.begin(), members_.end(), [](const Member& m) { return m.active; }));
}

void MinerSet::set_active(const ParticipantId& id, bool active) {
  if (auto idx = index_of(id)) members_[*idx].active = active;
}

MinerSet MinerSet::all_active() const {
  MinerSet copy = *this;
  for (auto& m : copy.members_) m.active = true;
  return copy;
}

}  // namespace hrchain::consensus
