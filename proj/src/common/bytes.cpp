#include "hrchain/common/bytes.hpp"

#include <limits>
#include <stdexcept>

namespace hrchain {

std::string_view to_string(DecodeErrc code) {
  switch (code) {
    case DecodeErrc::TruncatedInput: return "TruncatedInput";
    case DecodeErrc::BadTag: return "BadTag";
    case DecodeErrc::TrailingBytes: return "TrailingBytes";
    case DecodeErrc::NonCanonical: return "NonCanonical";
  }
  return "DecodeError";
}

std::string to_hex(ByteView bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0x0f]);
  }
  return out;
}

namespace {
int nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}
}  // namespace

std::optional<Bytes> from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) return std::nullopt;
  Bytes out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    int hi = nibble(hex[i]);
    int lo = nibble(hex[i + 1]);
    if (hi < 0 || lo < 0) return std::nullopt;
    out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
  }
  return out;
}

void ByteWriter::bytes16(ByteView bytes) {
  if (bytes.size() > std::numeric_limits<std::uint16_t>::max()) {
    throw std::length_error("field exceeds 16-bit length prefix");
  }
  u16(static_cast<std::uint16_t>(bytes.size()));
  raw(bytes);
}

void ByteWriter::bytes32(ByteView bytes) {
  if (bytes.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw std::length_error("field exceeds 32-bit length prefix");
  }
  u32(static_cast<std::uint32_t>(bytes.size()));
  raw(bytes);
}

std::uint8_t ByteReader::u8() {
  if (remaining() < 1) throw DecodeError(DecodeErrc::TruncatedInput);
  return in_[pos_++];
}

ByteView ByteReader::raw(std::size_t n) {
  if (remaining() < n) throw DecodeError(DecodeErrc::TruncatedInput);
  auto view = in_.subspan(pos_, n);
  pos_ += n;
  return view;
}

Bytes ByteReader::bytes16() {
  auto n = u16();
  auto view = raw(n);
  return Bytes(view.begin(), view.end());
}

Bytes ByteReader::bytes32() {
  auto n = u32();
  auto view = raw(n);
  return Bytes(view.begin(), view.end());
}

std::string ByteReader::str16() {
  auto b = bytes16();
  return std::string(b.begin(), b.end());
}

void ByteReader::finish() const {
  if (!done()) throw DecodeError(DecodeErrc::TrailingBytes);
}

std::uint64_t ByteReader::get_le(int width) {
  auto view = raw(static_cast<std::size_t>(width));
  std::uint64_t v = 0;
  for (int i = 0; i < width; ++i) v |= static_cast<std::uint64_t>(view[i]) << (8 * i);
  return v;
}

}  // namespace hrchain
