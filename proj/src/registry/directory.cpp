#include "hrchain/registry/directory.hpp"

namespace hrchain::registry {

ParticipantId Directory::register_participant(Role role, ByteView public_key) {
  auto id = participant_id(public_key);
  if (auto it = index_.find(id); it != index_.end()) {
    if (participants_[it->second].role != role) {
      throw RegistryError(RegistryErrc::InvalidGrant, "role conflict for " + id.short_hex());
    }
    return id;
  }
  index_.emplace(id, participants_.size());
  participants_.push_back(Participant{id, role, Bytes(public_key.begin(), public_key.end()), {}});
  return id;
}

void Directory::apply_grant(const ParticipantId& grantor, const GrantEntry& entry, bool bootstrap) {
  if (!bootstrap && !holds(grantor, Right::Mine)) {
    throw RegistryError(RegistryErrc::InvalidGrant, "grantor lacks mine right");
  }
  if (entry.rights.has(Right::Attest) && !is_authority_role(entry.role)) {
    throw RegistryError(RegistryErrc::InvalidGrant, "attest requires an authority role");
  }
  if (participant_id(entry.public_key) != entry.subject) {
    throw RegistryError(RegistryErrc::InvalidGrant, "subject does not match key");
  }
  register_participant(entry.role, entry.public_key);
  grants_[entry.subject][grantor] = entry.rights;
  recompute_rights(entry.subject);
}

std::size_t Directory::apply_grant_tx(const ledger::Transaction& tx, bool bootstrap) {
  if (tx.kind != ledger::TxKind::PermissionGrant) return 0;
  PermissionGrant grant;
  try {
    grant = PermissionGrant::decode(tx.payload);
  } catch (const DecodeError&) {
    return 0;
  }
  std::size_t applied = 0;
  for (const auto& entry : grant.entries) {
    try {
      apply_grant(tx.author, entry, bootstrap);
      ++applied;
    } catch (const RegistryError&) {
    }
  }
  return applied;
}

void Directory::recompute_rights(const ParticipantId& subject) {
  Rights effective;
  for (const auto& [grantor, rights] : grants_[subject]) effective = effective | rights;
  participants_[index_.at(subject)].rights = effective;
}

const Participant* Directory::find(const ParticipantId& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &participants_[it->second];
}

const Participant& Directory::get(const ParticipantId& id) const {
  const auto* p = find(id);
  if (p == nullptr) throw RegistryError(RegistryErrc::UnknownParticipant, id.short_hex());
  return *p;
}

Rights Directory::rights_of(const ParticipantId& id) const {
  const auto* p = find(id);
  return p == nullptr ? Rights{} : p->rights;
}

std::vector<ParticipantId> Directory::holders(Right right) const {
  std::vector<ParticipantId> out;
  for (const auto& p : participants_) {
    if (p.rights.has(right)) out.push_back(p.id);
  }
  return out;
}

Directory replay_directory(std::span<const ledger::Block> blocks) {
  Directory dir;
  for (const auto& block : blocks) {
    const bool bootstrap = block.header.height == 0;
    for (const auto& tx : block.transactions) dir.apply_grant_tx(tx, bootstrap);
  }
  return dir;
}

}  // namespace hrchain::registry
