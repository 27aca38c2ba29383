#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "hrchain/common/bytes.hpp"
#include "hrchain/ledger/digest.hpp"
#include "hrchain/registry/identity.hpp"

namespace hrchain::registry {
class KeyPair;
}

namespace hrchain::ledger {

using registry::ParticipantId;
using registry::Signature;

enum class TxKind : std::uint8_t {
  ClaimAttestation = 1,
  ContractRecord = 2,
  HrEventRecord = 3,
  PermissionGrant = 4,
};

std::string_view to_string(TxKind kind);
std::optional<TxKind> tx_kind_from_byte(std::uint8_t raw);

/// Typed on-chain record. `payload` is the canonical encoding of the
/// kind-specific record owned by the recruit, hrm or registry modules.
struct Transaction {
  TxKind kind = TxKind::PermissionGrant;
  Bytes payload;
  ParticipantId author;
  Signature author_signature;
  std::uint64_t nonce = 0;

  friend bool operator==(const Transaction&, const Transaction&) = default;
};

/// Bytes covered by the author signature: kind, author, nonce, payload.
Bytes signing_bytes(const Transaction& tx);

/// Canonical encoding: kind u8, author 32B, nonce u64, payload (u32 length
/// + bytes), author signature (u16 length + scheme blob).
Bytes encode_tx(const Transaction& tx);
void encode_tx(ByteWriter& out, const Transaction& tx);
Transaction decode_tx(ByteView bytes);
Transaction decode_tx(ByteReader& in);

/// double_hash(encode_tx(tx)); also the Merkle leaf value.
Digest tx_id(const Transaction& tx);

/// Builds and signs a transaction authored by `keys`.
Transaction make_transaction(TxKind kind, Bytes payload, const registry::KeyPair& keys,
                             std::uint64_t nonce);

/// Author signature check against the author id.
bool verify_transaction(const Transaction& tx);

}  // namespace hrchain::ledger
