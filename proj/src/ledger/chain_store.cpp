#include "hrchain/ledger/chain_store.hpp"

#include <fstream>
#include <iterator>
#include <stdexcept>

namespace hrchain::ledger {

Bytes encode_chain_frames(std::span<const Block> blocks) {
  ByteWriter w;
  for (const auto& block : blocks) w.bytes32(encode_block(block));
  return std::move(w).take();
}

std::vector<Bytes> split_chain_frames(ByteView bytes) {
  ByteReader in(bytes);
  std::vector<Bytes> frames;
  while (!in.done()) frames.push_back(in.bytes32());
  return frames;
}

std::vector<Block> decode_chain_frames(ByteView bytes) {
  std::vector<Block> blocks;
  for (const auto& frame : split_chain_frames(bytes)) blocks.push_back(decode_block(frame));
  return blocks;
}

Bytes read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::filesystem::path& path, ByteView bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("short write to " + path.string());
}

void write_chain_file(const std::filesystem::path& path, const Chain& chain) {
  write_file(path, encode_chain_frames(chain.blocks()));
}

void append_block_file(const std::filesystem::path& path, const Block& block) {
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw std::runtime_error("cannot append to " + path.string());
  ByteWriter w;
  w.bytes32(encode_block(block));
  out.write(reinterpret_cast<const char*>(w.data().data()), static_cast<std::streamsize>(w.size()));
  if (!out) throw std::runtime_error("short write to " + path.string());
}

Chain read_chain_file(const std::filesystem::path& path) {
  return Chain(decode_chain_frames(read_file(path)));
}

}  // namespace hrchain::ledger
