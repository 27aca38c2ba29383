#include "hrchain/ledger/block.hpp"

#include "hrchain/ledger/hash.hpp"
#include "hrchain/ledger/merkle.hpp"
#include "hrchain/registry/keys.hpp"

namespace hrchain::ledger {

std::string_view to_string(LedgerErrc code) {
  switch (code) {
    case LedgerErrc::EmptyTransactionList: return "EmptyTransactionList";
    case LedgerErrc::NonMonotonicTimestamp: return "NonMonotonicTimestamp";
  }
  return "LedgerError";
}

namespace {

void write_header(ByteWriter& w, const BlockHeader& h) {
  w.u32(h.version);
  w.raw(h.prev_hash.view());
  w.raw(h.merkle_root.view());
  w.u64(h.height);
  w.u64(h.timestamp);
  w.raw(h.miner.value.view());
}

BlockHeader read_header(ByteReader& in) {
  BlockHeader h;
  h.version = in.u32();
  h.prev_hash = Digest(in.fixed<Digest::kSize>());
  h.merkle_root = Digest(in.fixed<Digest::kSize>());
  h.height = in.u64();
  h.timestamp = in.u64();
  h.miner = ParticipantId{Digest(in.fixed<Digest::kSize>())};
  return h;
}

}  // namespace

Bytes encode_header(const BlockHeader& header) {
  ByteWriter w;
  write_header(w, header);
  return std::move(w).take();
}

Digest block_id(const BlockHeader& header) { return double_hash(encode_header(header)); }

Bytes encode_block(const Block& block) {
  ByteWriter w;
  write_header(w, block.header);
  registry::encode_signature(w, block.miner_signature);
  w.u32(block.tx_count);
  for (const auto& tx : block.transactions) w.bytes32(encode_tx(tx));
  return std::move(w).take();
}

Block decode_block(ByteView bytes) {
  ByteReader in(bytes);
  Block block;
  block.header = read_header(in);
  block.miner_signature = registry::decode_signature(in);
  block.tx_count = in.u32();
  // Every transaction needs at least its length prefix; refuse absurd counts
  // before reserving memory for them.
  if (block.tx_count > in.remaining() / 4) throw DecodeError(DecodeErrc::TruncatedInput, "tx_count");
  block.transactions.reserve(block.tx_count);
  for (std::uint32_t i = 0; i < block.tx_count; ++i) {
    auto raw = in.bytes32();
    block.transactions.push_back(decode_tx(raw));
  }
  in.finish();
  return block;
}

Block build_block(const Block& parent, std::vector<Transaction> transactions,
                  const ParticipantId& miner, std::uint64_t timestamp) {
  if (transactions.empty()) throw LedgerError(LedgerErrc::EmptyTransactionList);
  if (timestamp < parent.header.timestamp) {
    throw LedgerError(LedgerErrc::NonMonotonicTimestamp,
                      std::to_string(timestamp) + " < " + std::to_string(parent.header.timestamp));
  }
  Block block;
  block.header.version = kBlockVersion;
  block.header.prev_hash = block_id(parent);
  block.header.merkle_root = merkle_root(transactions);
  block.header.height = parent.header.height + 1;
  block.header.timestamp = timestamp;
  block.header.miner = miner;
  block.tx_count = static_cast<std::uint32_t>(transactions.size());
  block.transactions = std::move(transactions);
  return block;
}

void sign_block(Block& block, const registry::KeyPair& keys) {
  block.miner_signature = registry::sign(keys, encode_header(block.header));
}

Block make_genesis(const Transaction& bootstrap, const registry::KeyPair& founder,
                   std::uint64_t timestamp) {
  Block block;
  block.header.version = kBlockVersion;
  block.header.height = 0;
  block.header.timestamp = timestamp;
  block.header.miner = founder.id();
  block.transactions.push_back(bootstrap);
  block.tx_count = 1;
  block.header.merkle_root = merkle_root(block.transactions);
  sign_block(block, founder);
  return block;
}

}  // namespace hrchain::ledger
