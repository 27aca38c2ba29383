#pragma once

#include <span>

#include "hrchain/ledger/digest.hpp"
#include "hrchain/ledger/transaction.hpp"

namespace hrchain::ledger {

/// Root over leaves double_hash(encode_tx(tx)); interior nodes are
/// double_hash(left || right) and an odd level repeats its last node.
/// Throws LedgerError{EmptyTransactionList} for an empty list.
Digest merkle_root(std::span<const Transaction> transactions);

/// Same reduction over precomputed leaf digests.
Digest merkle_root_of_leaves(std::span<const Digest> leaves);

}  // namespace hrchain::ledger
