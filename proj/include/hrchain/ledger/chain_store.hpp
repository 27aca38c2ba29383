#pragma once

#include <filesystem>
#include <vector>

#include "hrchain/common/bytes.hpp"
#include "hrchain/ledger/block.hpp"

namespace hrchain::ledger {

/// File name of a node's append-only block log.
inline constexpr const char* kChainFileName = "chain.dat";

/// Concatenated frames: u32 little-endian length, then encode_block bytes.
Bytes encode_chain_frames(std::span<const Block> blocks);
/// Splits frames without decoding blocks. Throws DecodeError{TruncatedInput}
/// on a partial frame.
std::vector<Bytes> split_chain_frames(ByteView bytes);
std::vector<Block> decode_chain_frames(ByteView bytes);

Bytes read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, ByteView bytes);

/// Replaces the file with the full chain.
void write_chain_file(const std::filesystem::path& path, const Chain& chain);
/// Appends one frame; existing bytes are never rewritten.
void append_block_file(const std::filesystem::path& path, const Block& block);
Chain read_chain_file(const std::filesystem::path& path);

}  // namespace hrchain::ledger
