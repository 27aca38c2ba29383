#include "hrchain/ledger/digest.hpp"

#include <algorithm>

namespace hrchain::ledger {

Digest Digest::from_bytes(ByteView bytes) {
  if (bytes.size() != kSize) throw DecodeError(DecodeErrc::TruncatedInput, "digest length");
  Array a{};
  std::copy(bytes.begin(), bytes.end(), a.begin());
  return Digest(a);
}

std::optional<Digest> Digest::from_hex(std::string_view hex) {
  auto raw = hrchain::from_hex(hex);
  if (!raw || raw->size() != kSize) return std::nullopt;
  return from_bytes(*raw);
}

bool Digest::is_zero() const {
  return std::all_of(bytes_.begin(), bytes_.end(), [](std::uint8_t b) { return b == 0; });
}

std::string Digest::hex() const { return to_hex(bytes_); }

}  // namespace hrchain::ledger
