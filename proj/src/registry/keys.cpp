#include "hrchain/registry/keys.hpp"

#include <sodium.h>

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "hrchain/ledger/hash.hpp"

namespace hrchain::registry {

namespace {

constexpr std::size_t kSigSize = crypto_sign_BYTES;
constexpr std::size_t kSchemeBytes = kPublicKeySize + kSigSize;

void ensure_sodium() {
  static const bool ok = sodium_init() >= 0;
  if (!ok) throw std::runtime_error("libsodium initialisation failed");
}

}  // namespace

KeyPair KeyPair::from_seed(const Seed& seed) {
  ensure_sodium();
  KeyPair kp;
  kp.seed_ = seed;
  crypto_sign_seed_keypair(kp.public_key_.data(), kp.secret_key_.data(), seed.data());
  kp.id_ = participant_id(kp.public_key_);
  return kp;
}

KeyPair KeyPair::derive(std::string_view label) {
  return from_seed(ledger::double_hash(as_bytes(label)).bytes());
}

Signature sign(const KeyPair& keys, ByteView message) {
  auto digest = ledger::double_hash(message);
  Signature sig;
  sig.scheme_id = kEd25519Scheme;
  sig.bytes.resize(kSchemeBytes);
  std::copy(keys.public_key_.begin(), keys.public_key_.end(), sig.bytes.begin());
  crypto_sign_detached(sig.bytes.data() + kPublicKeySize, nullptr, digest.bytes().data(),
                       digest.bytes().size(), keys.secret_key_.data());
  return sig;
}

std::optional<Bytes> signer_key(const Signature& sig) {
  if (sig.scheme_id != kEd25519Scheme || sig.bytes.size() != kSchemeBytes) return std::nullopt;
  return Bytes(sig.bytes.begin(), sig.bytes.begin() + kPublicKeySize);
}

bool verify(ByteView public_key, ByteView message, const Signature& sig) {
  if (public_key.size() != kPublicKeySize) {
    throw RegistryError(RegistryErrc::BadKeyLength, "public key");
  }
  ensure_sodium();
  if (sig.scheme_id != kEd25519Scheme || sig.bytes.size() != kSchemeBytes) return false;
  if (!std::equal(public_key.begin(), public_key.end(), sig.bytes.begin())) return false;
  auto digest = ledger::double_hash(message);
  return crypto_sign_verify_detached(sig.bytes.data() + kPublicKeySize, digest.bytes().data(),
                                     digest.bytes().size(), public_key.data()) == 0;
}

bool verify_signed_by(const ParticipantId& signer, ByteView message, const Signature& sig) {
  auto key = signer_key(sig);
  if (!key) return false;
  if (ledger::double_hash(*key) != signer.value) return false;
  return verify(*key, message, sig);
}

}  // namespace hrchain::registry
