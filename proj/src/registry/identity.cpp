#include "hrchain/registry/identity.hpp"

#include "hrchain/ledger/hash.hpp"
#include "hrchain/registry/keys.hpp"

namespace hrchain::registry {

std::string_view to_string(RegistryErrc code) {
  switch (code) {
    case RegistryErrc::BadKeyLength: return "BadKeyLength";
    case RegistryErrc::UnknownParticipant: return "UnknownParticipant";
    case RegistryErrc::NoAuthorityRegistered: return "NoAuthorityRegistered";
    case RegistryErrc::BadRoster: return "BadRoster";
    case RegistryErrc::InvalidGrant: return "InvalidGrant";
  }
  return "RegistryError";
}

ParticipantId participant_id(ByteView public_key) {
  if (public_key.size() != kPublicKeySize) {
    throw RegistryError(RegistryErrc::BadKeyLength,
                        "expected " + std::to_string(kPublicKeySize) + " bytes, got " +
                            std::to_string(public_key.size()));
  }
  return ParticipantId{ledger::double_hash(public_key)};
}

void encode_signature(ByteWriter& out, const Signature& sig) {
  if (sig.empty()) {
    out.u16(0);
    return;
  }
  Bytes blob;
  blob.reserve(sig.bytes.size() + 1);
  blob.push_back(sig.scheme_id);
  blob.insert(blob.end(), sig.bytes.begin(), sig.bytes.end());
  out.bytes16(blob);
}

Signature decode_signature(ByteReader& in) {
  auto blob = in.bytes16();
  if (blob.empty()) return {};
  Signature sig;
  sig.scheme_id = blob.front();
  if (sig.scheme_id == 0) throw DecodeError(DecodeErrc::BadTag, "signature scheme 0 with payload");
  sig.bytes.assign(blob.begin() + 1, blob.end());
  return sig;
}

}  // namespace hrchain::registry
