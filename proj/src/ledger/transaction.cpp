#include "hrchain/ledger/transaction.hpp"

#include "hrchain/ledger/hash.hpp"
#include "hrchain/registry/keys.hpp"

namespace hrchain::ledger {

std::string_view to_string(TxKind kind) {
  switch (kind) {
    case TxKind::ClaimAttestation: return "ClaimAttestation";
    case TxKind::ContractRecord: return "ContractRecord";
    case TxKind::HrEventRecord: return "HrEventRecord";
    case TxKind::PermissionGrant: return "PermissionGrant";
  }
  return "Unknown";
}

std::optional<TxKind> tx_kind_from_byte(std::uint8_t raw) {
  if (raw >= 1 && raw <= 4) return static_cast<TxKind>(raw);
  return std::nullopt;
}

Bytes signing_bytes(const Transaction& tx) {
  ByteWriter w;
  w.u8(static_cast<std::uint8_t>(tx.kind));
  w.raw(tx.author.value.view());
  w.u64(tx.nonce);
  w.bytes32(tx.payload);
  return std::move(w).take();
}

void encode_tx(ByteWriter& out, const Transaction& tx) {
  out.u8(static_cast<std::uint8_t>(tx.kind));
  out.raw(tx.author.value.view());
  out.u64(tx.nonce);
  out.bytes32(tx.payload);
  registry::encode_signature(out, tx.author_signature);
}

Bytes encode_tx(const Transaction& tx) {
  ByteWriter w;
  encode_tx(w, tx);
  return std::move(w).take();
}

Transaction decode_tx(ByteReader& in) {
  Transaction tx;
  auto kind = tx_kind_from_byte(in.u8());
  if (!kind) throw DecodeError(DecodeErrc::BadTag, "transaction kind");
  tx.kind = *kind;
  tx.author = ParticipantId{Digest(in.fixed<Digest::kSize>())};
  tx.nonce = in.u64();
  tx.payload = in.bytes32();
  tx.author_signature = registry::decode_signature(in);
  return tx;
}

Transaction decode_tx(ByteView bytes) {
  ByteReader in(bytes);
  auto tx = decode_tx(in);
  in.finish();
  return tx;
}

Digest tx_id(const Transaction& tx) { return double_hash(encode_tx(tx)); }

Transaction make_transaction(TxKind kind, Bytes payload, const registry::KeyPair& keys,
                             std::uint64_t nonce) {
  Transaction tx;
  tx.kind = kind;
  tx.payload = std::move(payload);
  tx.author = keys.id();
  tx.nonce = nonce;
  tx.author_signature = registry::sign(keys, signing_bytes(tx));
  return tx;
}

bool verify_transaction(const Transaction& tx) {
  return registry::verify_signed_by(tx.author, signing_bytes(tx), tx.author_signature);
}

}  // namespace hrchain::ledger
