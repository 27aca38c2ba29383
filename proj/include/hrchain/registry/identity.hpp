#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "hrchain/common/bytes.hpp"
#include "hrchain/common/error.hpp"
#include "hrchain/ledger/digest.hpp"

namespace hrchain::registry {

enum class RegistryErrc {
  BadKeyLength,
  UnknownParticipant,
  NoAuthorityRegistered,
  BadRoster,
  InvalidGrant,
};

std::string_view to_string(RegistryErrc code);

using RegistryError = CodedError<RegistryErrc>;

/// Participant identity: double_hash of the participant's public key.
struct ParticipantId {
  ledger::Digest value;

  std::string hex() const { return value.hex(); }
  std::string short_hex() const { return value.short_hex(); }
  bool is_zero() const { return value.is_zero(); }

  friend auto operator<=>(const ParticipantId&, const ParticipantId&) = default;
};

/// Derives a ParticipantId from public-key bytes. Throws BadKeyLength for an
/// empty key or one of the wrong size for the signature scheme.
ParticipantId participant_id(ByteView public_key);

/// Scheme-tagged signature bytes. A default-constructed Signature means
/// "unsigned" and never verifies.
struct Signature {
  std::uint8_t scheme_id = 0;
  Bytes bytes;

  bool empty() const { return scheme_id == 0 && bytes.empty(); }
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Wire form used inside blocks and transactions: u16 length, then
/// scheme_id followed by the scheme bytes. Unsigned encodes as length 0.
void encode_signature(ByteWriter& out, const Signature& sig);
Signature decode_signature(ByteReader& in);

}  // namespace hrchain::registry
