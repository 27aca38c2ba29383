#include "hrchain/simnet/node.hpp"

#include <algorithm>

#include "hrchain/hrm/hire.hpp"

namespace hrchain::simnet {

bool add_to_mempool(SimNode& node, const ledger::Transaction& tx) {
  auto id = ledger::tx_id(tx);
  if (node.committed_txs.contains(id)) return false;
  for (const auto& queued : node.mempool) {
    if (ledger::tx_id(queued) == id) return false;
  }
  node.mempool.push_back(tx);
  return true;
}

void append_block(SimNode& node, ledger::Block block) {
  for (const auto& tx : block.transactions) node.committed_txs.insert(ledger::tx_id(tx));
  std::erase_if(node.mempool, [&](const auto& tx) { return node.committed_txs.contains(ledger::tx_id(tx)); });
  node.chain.push_back(std::move(block));
  if (node.pending && node.pending->height <= node.chain.height()) node.pending.reset();
}

void adopt_chain(SimNode& node, ledger::Chain chain) {
  std::vector<ledger::Transaction> orphaned;
  for (const auto& b : node.chain.blocks()) {
    for (const auto& tx : b.transactions) orphaned.push_back(tx);
  }
  node.chain = std::move(chain);
  node.committed_txs.clear();
  for (const auto& b : node.chain.blocks()) {
    for (const auto& tx : b.transactions) node.committed_txs.insert(ledger::tx_id(tx));
  }
  std::erase_if(node.mempool, [&](const auto& tx) { return node.committed_txs.contains(ledger::tx_id(tx)); });
  for (const auto& tx : orphaned) add_to_mempool(node, tx);
  node.pending.reset();
}

std::vector<ledger::Transaction> select_transactions(const SimNode& node, bool batch_contracts,
                                                     std::size_t max_txs) {
  std::vector<ledger::Transaction> out;
  std::set<std::pair<registry::ParticipantId, std::uint64_t>> used;
  auto usable = [&](const ledger::Transaction& tx) {
    return ledger::verify_transaction(tx) && !used.contains({tx.author, tx.nonce});
  };
  auto first = std::find_if(node.mempool.begin(), node.mempool.end(), usable);
  if (first == node.mempool.end()) return out;
  const bool contracts = first->kind == ledger::TxKind::ContractRecord;
  for (const auto& tx : node.mempool) {
    if (out.size() == max_txs) break;
    if ((tx.kind == ledger::TxKind::ContractRecord) != contracts || !usable(tx)) continue;
    used.insert({tx.author, tx.nonce});
    out.push_back(tx);
    if (contracts && !batch_contracts) break;
  }
  return out;
}

std::uint64_t take_nonce(SimNode& node, const registry::ParticipantId& identity) {
  auto on_chain = hrm::next_nonce(identity, node.chain.blocks());
  for (const auto& tx : node.mempool) {
    if (tx.author == identity) on_chain = std::max(on_chain, tx.nonce + 1);
  }
  auto& next = node.next_nonce[identity];
  next = std::max(next, on_chain);
  return next++;
}

}  // namespace hrchain::simnet
