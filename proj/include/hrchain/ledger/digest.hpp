#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hrchain/common/bytes.hpp"

namespace hrchain::ledger {

/// 32-byte output of the hash pipeline. Orders lexicographically by bytes.
class Digest {
 public:
  static constexpr std::size_t kSize = 32;
  using Array = std::array<std::uint8_t, kSize>;

  constexpr Digest() = default;
  constexpr explicit Digest(const Array& bytes) : bytes_(bytes) {}
  /// Throws DecodeError{TruncatedInput} unless exactly 32 bytes are given.
  static Digest from_bytes(ByteView bytes);
  static std::optional<Digest> from_hex(std::string_view hex);

  const Array& bytes() const { return bytes_; }
  ByteView view() const { return bytes_; }
  bool is_zero() const;
  std::string hex() const;
  /// First 8 hex digits, for logs and human-readable dumps.
  std::string short_hex() const { return hex().substr(0, 8); }

  friend constexpr auto operator<=>(const Digest&, const Digest&) = default;

 private:
  Array bytes_{};
};

}  // namespace hrchain::ledger
