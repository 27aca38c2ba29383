#pragma once

#include <map>
#include <span>
#include <vector>

#include "hrchain/ledger/block.hpp"
#include "hrchain/registry/identity.hpp"
#include "hrchain/registry/permission.hpp"

namespace hrchain::registry {

struct Participant {
  ParticipantId id;
  Role role = Role::Applicant;
  Bytes public_key;
  Rights rights;
};

/// Participant table: identities in registration order plus the effective
/// rights each one holds. Rebuilt by folding PermissionGrant transactions.
class Directory {
 public:
  /// id = double_hash(public_key). Idempotent for the same key; throws
  /// BadKeyLength for a malformed key and InvalidGrant if the key is
  /// already registered under another role.
  ParticipantId register_participant(Role role, ByteView public_key);

  /// Applies one grant entry from `grantor`. Without `bootstrap`, the
  /// grantor must already hold Mine. Attest is only granted to authority
  /// roles. The latest grant per (grantor, subject) wins; effective rights
  /// are the union over grantors. Throws InvalidGrant.
  void apply_grant(const ParticipantId& grantor, const GrantEntry& entry, bool bootstrap);

  /// Applies every entry of a PermissionGrant transaction, skipping
  /// invalid ones. Returns the number of entries applied.
  std::size_t apply_grant_tx(const ledger::Transaction& tx, bool bootstrap);

  const Participant* find(const ParticipantId& id) const;
  /// Throws UnknownParticipant.
  const Participant& get(const ParticipantId& id) const;
  Rights rights_of(const ParticipantId& id) const;
  bool holds(const ParticipantId& id, Right right) const { return rights_of(id).has(right); }

  const std::vector<Participant>& participants() const { return participants_; }
  /// Holders of `right` in registration order.
  std::vector<ParticipantId> holders(Right right) const;
  std::vector<ParticipantId> miners() const { return holders(Right::Mine); }

 private:
  void recompute_rights(const ParticipantId& subject);

  std::vector<Participant> participants_;
  std::map<ParticipantId, std::size_t> index_;
  std::map<ParticipantId, std::map<ParticipantId, Rights>> grants_;  // subject -> grantor -> rights
};

/// Folds every PermissionGrant in chain order; genesis grants are the
/// bootstrap and need no prior Mine right.
Directory replay_directory(std::span<const ledger::Block> blocks);
inline Directory replay_directory(const ledger::Chain& chain) {
  return replay_directory(chain.blocks());
}

}  // namespace hrchain::registry
