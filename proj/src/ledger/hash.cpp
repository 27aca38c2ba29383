#include "hrchain/ledger/hash.hpp"

#include <sodium.h>

#include <stdexcept>

namespace hrchain::ledger {

namespace {
struct SodiumInit {
  SodiumInit() {
    if (sodium_init() < 0) throw std::runtime_error("libsodium initialisation failed");
  }
};
}  // namespace

Digest sha256(ByteView data) {
  static const SodiumInit init;
  Digest::Array out{};
  crypto_hash_sha256(out.data(), data.data(), data.size());
  return Digest(out);
}

Digest double_hash(ByteView data) { return sha256(sha256(data).view()); }

Digest hash_pair(const Digest& left, const Digest& right) {
  std::array<std::uint8_t, 2 * Digest::kSize> buf{};
  std::copy(left.bytes().begin(), left.bytes().end(), buf.begin());
  std::copy(right.bytes().begin(), right.bytes().end(), buf.begin() + Digest::kSize);
  return double_hash(buf);
}

}  // namespace hrchain::ledger
