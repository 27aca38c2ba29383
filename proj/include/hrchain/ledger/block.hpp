#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "hrchain/common/bytes.hpp"
#include "hrchain/common/error.hpp"
#include "hrchain/ledger/digest.hpp"
#include "hrchain/ledger/transaction.hpp"

namespace hrchain::ledger {

inline constexpr std::uint32_t kBlockVersion = 1;
inline constexpr std::size_t kHeaderSize = 4 + 32 + 32 + 8 + 8 + 32;

enum class LedgerErrc {
  EmptyTransactionList,
  NonMonotonicTimestamp,
};

std::string_view to_string(LedgerErrc code);

using LedgerError = CodedError<LedgerErrc>;

struct BlockHeader {
  std::uint32_t version = kBlockVersion;
  Digest prev_hash;
  Digest merkle_root;
  std::uint64_t height = 0;
  std::uint64_t timestamp = 0;  // simulated ticks
  ParticipantId miner;

  friend bool operator==(const BlockHeader&, const BlockHeader&) = default;
};

struct Block {
  BlockHeader header;
  std::uint32_t tx_count = 0;
  std::vector<Transaction> transactions;
  Signature miner_signature;

  friend bool operator==(const Block&, const Block&) = default;
};

/// Fixed 116-byte little-endian header layout.
Bytes encode_header(const BlockHeader& header);

/// double_hash(encode_header(header)); the block's identity and the
/// message the miner signs.
Digest block_id(const BlockHeader& header);
inline Digest block_id(const Block& block) { return block_id(block.header); }

/// Header, miner signature (u16 length + blob), tx_count u32, then each
/// transaction as a u32 length prefix plus its canonical encoding.
Bytes encode_block(const Block& block);
/// Throws DecodeError: TruncatedInput, BadTag, TrailingBytes, NonCanonical.
Block decode_block(ByteView bytes);

/// Unsigned child of `parent`: height + 1, linked to block_id(parent),
/// Merkle root over `transactions`.
Block build_block(const Block& parent, std::vector<Transaction> transactions,
                  const ParticipantId& miner, std::uint64_t timestamp);

/// Fills miner_signature. `keys` must own header.miner.
void sign_block(Block& block, const registry::KeyPair& keys);

/// Height-0 block with a zero prev_hash holding exactly `bootstrap`, mined
/// and signed by `founder`.
Block make_genesis(const Transaction& bootstrap, const registry::KeyPair& founder,
                   std::uint64_t timestamp = 0);

/// Ordered blocks starting at genesis. A plain container: validity is
/// established by validate_chain, not by construction.
class Chain {
 public:
  Chain() = default;
  explicit Chain(Block genesis) { blocks_.push_back(std::move(genesis)); }
  explicit Chain(std::vector<Block> blocks) : blocks_(std::move(blocks)) {}

  bool empty() const { return blocks_.empty(); }
  std::size_t size() const { return blocks_.size(); }
  /// Height of the tip; a genesis-only chain has height 0.
  std::uint64_t height() const { return blocks_.empty() ? 0 : blocks_.back().header.height; }
  const Block& tip() const { return blocks_.back(); }
  const Block& genesis() const { return blocks_.front(); }
  const Block& at(std::size_t height) const { return blocks_.at(height); }
  std::span<const Block> blocks() const { return blocks_; }
  /// Blocks [0, end).
  std::span<const Block> prefix(std::size_t end) const {
    return std::span<const Block>(blocks_).first(end);
  }

  void push_back(Block block) { blocks_.push_back(std::move(block)); }
  void truncate(std::size_t size) { blocks_.resize(size); }

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  std::vector<Block> blocks_;
};

}  // namespace hrchain::ledger
