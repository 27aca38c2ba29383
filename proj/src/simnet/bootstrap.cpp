#include "hrchain/simnet/bootstrap.hpp"

#include <algorithm>
#include <stdexcept>

#include "hrchain/registry/permission.hpp"

namespace hrchain::simnet {

namespace {

const registry::RosterEntry& entry(std::span<const registry::RosterEntry> roster, std::string_view name) {
  auto it = std::find_if(roster.begin(), roster.end(), [&](const auto& e) { return e.name == name; });
  if (it == roster.end()) throw std::invalid_argument("no roster entry '" + std::string(name) + "'");
  return *it;
}

registry::GrantEntry grant_for(const registry::RosterEntry& e, bool miner) {
  using registry::Right;
  auto keys = e.keys();
  auto rights = registry::Rights{Right::Connect, Right::Send};
  if (miner) rights = rights | registry::Rights{Right::Mine};
  if (registry::is_authority_role(e.role)) rights = rights | registry::Rights{Right::Attest};
  auto pk = keys.public_key();
  return {keys.id(), e.role, Bytes(pk.begin(), pk.end()), rights};
}

}  // namespace

ledger::Block make_deployment_genesis(std::span<const registry::RosterEntry> roster,
                                      std::span<const std::string> miners) {
  if (miners.empty()) throw std::invalid_argument("deployment without miners");
  registry::PermissionGrant grant;
  for (const auto& m : miners) grant.entries.push_back(grant_for(entry(roster, m), true));
  for (const auto& e : roster) {
    if (std::find(miners.begin(), miners.end(), e.name) == miners.end()) {
      grant.entries.push_back(grant_for(e, false));
    }
  }
  auto founder = entry(roster, miners.front()).keys();
  auto tx = ledger::make_transaction(ledger::TxKind::PermissionGrant, grant.encode(), founder, 0);
  return ledger::make_genesis(tx, founder);
}

std::vector<registry::KeyPair> miner_keys(std::span<const registry::RosterEntry> roster,
                                          std::span<const std::string> miners) {
  std::vector<registry::KeyPair> out;
  for (const auto& m : miners) out.push_back(entry(roster, m).keys());
  return out;
}

consensus::MinerSet miner_set(std::span<const registry::RosterEntry> roster,
                              std::span<const std::string> miners) {
  std::vector<registry::ParticipantId> ids;
  for (const auto& m : miners) ids.push_back(entry(roster, m).keys().id());
  return consensus::MinerSet(std::move(ids));
}

}  // namespace hrchain::simnet
