#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hrchain/common/error.hpp"
#include "hrchain/registry/identity.hpp"

namespace hrchain::consensus {

using registry::ParticipantId;

enum class ConsensusErrc {
  EmptyMinerSet,
  DuplicateMiner,
  SelfValidation,
  UnpermittedValidator,
  ConsensusStalled,
  Rejected,
  NoValidCandidate,
};

std::string_view to_string(ConsensusErrc code);

using ConsensusError = CodedError<ConsensusErrc>;

/// Permitted miners in registration order, each with an activity flag.
/// The order drives the round-robin rotation.
class MinerSet {
 public:
  struct Member {
    ParticipantId id;
    bool active = true;
    friend bool operator==(const Member&, const Member&) = default;
  };

  /// Throws EmptyMinerSet / DuplicateMiner.
  explicit MinerSet(std::vector<ParticipantId> miners);

  std::size_t size() const { return members_.size(); }
  const Member& at(std::size_t index) const { return members_.at(index); }
  const std::vector<Member>& members() const { return members_; }

  std::optional<std::size_t> index_of(const ParticipantId& id) const;
  bool contains(const ParticipantId& id) const { return index_of(id).has_value(); }
  bool is_active(const ParticipantId& id) const;
  std::size_t active_count() const;

  /// No-op for ids outside the set.
  void set_active(const ParticipantId& id, bool active);
  /// Copy with every member marked active; validation uses this view since
  /// activity is a local observation, not chain state.
  MinerSet all_active() const;

  friend bool operator==(const MinerSet&, const MinerSet&) = default;

 private:
  std::vector<Member> members_;
};

}  // namespace hrchain::consensus
