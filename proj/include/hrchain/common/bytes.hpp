#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hrchain/common/error.hpp"

namespace hrchain {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

enum class DecodeErrc {
  TruncatedInput,
  BadTag,
  TrailingBytes,
  NonCanonical,
};

std::string_view to_string(DecodeErrc code);

using DecodeError = CodedError<DecodeErrc>;

std::string to_hex(ByteView bytes);
std::optional<Bytes> from_hex(std::string_view hex);

inline ByteView as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

/// Little-endian, append-only encoder used by every canonical format.
class ByteWriter {
 public:
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u16(std::uint16_t v) { put_le(v, 2); }
  void u32(std::uint32_t v) { put_le(v, 4); }
  void u64(std::uint64_t v) { put_le(v, 8); }
  void i64(std::int64_t v) { put_le(static_cast<std::uint64_t>(v), 8); }
  void raw(ByteView bytes) { out_.insert(out_.end(), bytes.begin(), bytes.end()); }

  // Length-prefixed variable fields; throws std::length_error on overflow.
  void bytes16(ByteView bytes);
  void bytes32(ByteView bytes);
  void str16(std::string_view s) { bytes16(as_bytes(s)); }

  const Bytes& data() const& { return out_; }
  Bytes take() && { return std::move(out_); }
  std::size_t size() const { return out_.size(); }

 private:
  void put_le(std::uint64_t v, int width) {
    for (int i = 0; i < width; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }

  Bytes out_;
};

/// Bounds-checked reader; every short read throws DecodeError{TruncatedInput}.
class ByteReader {
 public:
  explicit ByteReader(ByteView in) : in_(in) {}

  std::uint8_t u8();
  std::uint16_t u16() { return static_cast<std::uint16_t>(get_le(2)); }
  std::uint32_t u32() { return static_cast<std::uint32_t>(get_le(4)); }
  std::uint64_t u64() { return get_le(8); }
  std::int64_t i64() { return static_cast<std::int64_t>(get_le(8)); }
  ByteView raw(std::size_t n);
  template <std::size_t N>
  std::array<std::uint8_t, N> fixed() {
    std::array<std::uint8_t, N> out{};
    auto view = raw(N);
    std::copy(view.begin(), view.end(), out.begin());
    return out;
  }
  Bytes bytes16();
  Bytes bytes32();
  std::string str16();

  std::size_t remaining() const { return in_.size() - pos_; }
  std::size_t position() const { return pos_; }
  bool done() const { return remaining() == 0; }
  /// Throws DecodeError{TrailingBytes} unless the input was fully consumed.
  void finish() const;

 private:
  std::uint64_t get_le(int width);

  ByteView in_;
  std::size_t pos_ = 0;
};

}  // namespace hrchain
