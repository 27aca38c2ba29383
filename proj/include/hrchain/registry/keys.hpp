#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "hrchain/common/bytes.hpp"
#include "hrchain/registry/identity.hpp"

namespace hrchain::registry {

inline constexpr std::size_t kSeedSize = 32;
inline constexpr std::size_t kPublicKeySize = 32;
inline constexpr std::uint8_t kEd25519Scheme = 1;

using Seed = std::array<std::uint8_t, kSeedSize>;

/// Ed25519 key pair derived deterministically from a 32-byte seed.
class KeyPair {
 public:
  static KeyPair from_seed(const Seed& seed);
  /// Seed = double_hash(label); for rosters that omit explicit keys and for
  /// reproducible test fixtures.
  static KeyPair derive(std::string_view label);

  const Seed& seed() const { return seed_; }
  ByteView public_key() const { return public_key_; }
  const ParticipantId& id() const { return id_; }

 private:
  friend Signature sign(const KeyPair&, ByteView);

  Seed seed_{};
  std::array<std::uint8_t, kPublicKeySize> public_key_{};
  std::array<std::uint8_t, 64> secret_key_{};
  ParticipantId id_;
};

/// Signs double_hash(message). The scheme bytes are the signer's public key
/// followed by the 64-byte Ed25519 signature, so any holder of the
/// signature can check it against a ParticipantId without a key directory.
Signature sign(const KeyPair& keys, ByteView message);

/// True iff `sig` was produced by the key pair owning `public_key` over
/// exactly `message`. Throws BadKeyLength for a malformed public key.
bool verify(ByteView public_key, ByteView message, const Signature& sig);

/// Checks `sig` against an identity: the embedded key must hash to `signer`
/// and the signature must verify over `message`.
bool verify_signed_by(const ParticipantId& signer, ByteView message, const Signature& sig);

/// Public key embedded in a scheme-1 signature, if well-formed.
std::optional<Bytes> signer_key(const Signature& sig);

}  // namespace hrchain::registry
