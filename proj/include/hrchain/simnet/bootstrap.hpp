#pragma once

#include <span>
#include <string>
#include <vector>

#include "hrchain/consensus/miner_set.hpp"
#include "hrchain/ledger/block.hpp"
#include "hrchain/registry/roster.hpp"

namespace hrchain::simnet {

/// Genesis for a deployment: one PermissionGrant from the first miner
/// registering every roster entry, miners first in `miners` order, then the
/// rest in roster order. Miners get connect+send+mine, everyone else
/// connect+send; authority roles also get attest.
ledger::Block make_deployment_genesis(std::span<const registry::RosterEntry> roster,
                                      std::span<const std::string> miners);

std::vector<registry::KeyPair> miner_keys(std::span<const registry::RosterEntry> roster,
                                          std::span<const std::string> miners);

consensus::MinerSet miner_set(std::span<const registry::RosterEntry> roster,
                              std::span<const std::string> miners);

}  // namespace hrchain::simnet
