#pragma once

#include <span>

#include "hrchain/consensus/diversity.hpp"
#include "hrchain/consensus/miner_set.hpp"
#include "hrchain/ledger/block.hpp"

namespace hrchain::consensus {

/// Total order on candidate chains: longer wins; at equal length the tip
/// with the lexicographically smaller block_id wins.
bool preferred(const ledger::Chain& a, const ledger::Chain& b);

/// Best chain among the candidates that pass validate_chain. The result
/// does not depend on candidate order. Throws NoValidCandidate.
const ledger::Chain& fork_choice(std::span<const ledger::Chain> candidates,
                                 const DiversityRule& rule, const MinerSet& miners);

}  // namespace hrchain::consensus
