#include "hrchain/ledger/merkle.hpp"

#include <vector>

#include "hrchain/ledger/block.hpp"
#include "hrchain/ledger/hash.hpp"

namespace hrchain::ledger {

Digest merkle_root_of_leaves(std::span<const Digest> leaves) {
  if (leaves.empty()) throw LedgerError(LedgerErrc::EmptyTransactionList);
  std::vector<Digest> level(leaves.begin(), leaves.end());
  while (level.size() > 1) {
    if (level.size() % 2 != 0) level.push_back(level.back());
    std::vector<Digest> next;
    next.reserve(level.size() / 2);
    for (std::size_t i = 0; i < level.size(); i += 2) next.push_back(hash_pair(level[i], level[i + 1]));
    level = std::move(next);
  }
  return level.front();
}

Digest merkle_root(std::span<const Transaction> transactions) {
  if (transactions.empty()) throw LedgerError(LedgerErrc::EmptyTransactionList);
  std::vector<Digest> leaves;
  leaves.reserve(transactions.size());
  for (const auto& tx : transactions) leaves.push_back(tx_id(tx));
  return merkle_root_of_leaves(leaves);
}

}  // namespace hrchain::ledger
