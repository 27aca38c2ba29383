#include "hrchain/recruit/verification.hpp"

#include "hrchain/ledger/hash.hpp"
#include "hrchain/registry/authority.hpp"

namespace hrchain::recruit {

std::string_view to_string(RecruitErrc code) {
  switch (code) {
    case RecruitErrc::MissingVerification: return "MissingVerification";
    case RecruitErrc::SignatureFailure: return "SignatureFailure";
    case RecruitErrc::ParseError: return "ParseError";
    case RecruitErrc::EmptyRequirementSpec: return "EmptyRequirementSpec";
  }
  return "RecruitError";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Confirmed: return "Confirmed";
    case Verdict::Refuted: return "Refuted";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

Bytes verdict_message(const ledger::Digest& claim_ref, Verdict verdict) {
  ByteWriter w;
  w.str16("hrchain/verdict");
  w.raw(claim_ref.view());
  w.u8(static_cast<std::uint8_t>(verdict));
  return std::move(w).take();
}

bool verify_record(const VerificationRecord& record) {
  if (!record.attested()) return false;
  return registry::verify_signed_by(record.attester,
                                    verdict_message(record.claim_ref, record.verdict),
                                    record.attester_signature);
}

VerificationRecord unattested_record(const Claim& claim) {
  return VerificationRecord{claim.evidence_hash, Verdict::Unknown, {}, {}};
}

void AuthorityStore::add(const ParticipantId& applicant, ClaimKind kind, Record statement) {
  records_[{applicant, kind}].push_back(ledger::double_hash(statement.encode()));
}

Verdict AuthorityStore::lookup(const ParticipantId& applicant, const Claim& claim) const {
  auto it = records_.find({applicant, claim.kind});
  if (it == records_.end() || it->second.empty()) return Verdict::Unknown;
  for (const auto& stored : it->second) {
    if (stored == claim.evidence_hash) return Verdict::Confirmed;
  }
  return Verdict::Refuted;
}

std::size_t AuthorityStore::size() const {
  std::size_t n = 0;
  for (const auto& [key, list] : records_) n += list.size();
  return n;
}

VerificationRecord attest(const ParticipantId& applicant, const Claim& claim,
                          const registry::KeyPair& keys, const AuthorityStore& store) {
  VerificationRecord record;
  record.claim_ref = claim.evidence_hash;
  record.verdict = store.lookup(applicant, claim);
  record.attester = keys.id();
  record.attester_signature = registry::sign(keys, verdict_message(record.claim_ref, record.verdict));
  return record;
}

VerificationRecord verify_claim(const ParticipantId& applicant, const Claim& claim,
                                const registry::Directory& directory, const AuthorityPanel& panel) {
  auto authority = registry::authority_for(claim.kind, claim.issuer, directory);
  auto it = panel.find(authority);
  if (it == panel.end()) {
    throw registry::RegistryError(registry::RegistryErrc::NoAuthorityRegistered,
                                  "authority " + authority.short_hex() + " is not reachable");
  }
  auto record = attest(applicant, claim, it->second.keys, it->second.store);
  if (!verify_record(record)) throw RecruitError(RecruitErrc::SignatureFailure);
  return record;
}

Bytes ClaimAttestation::encode() const {
  ByteWriter w;
  w.raw(applicant.value.view());
  w.u8(static_cast<std::uint8_t>(kind));
  w.raw(record.claim_ref.view());
  w.u8(static_cast<std::uint8_t>(record.verdict));
  w.raw(record.attester.value.view());
  registry::encode_signature(w, record.attester_signature);
  return std::move(w).take();
}

ClaimAttestation ClaimAttestation::decode(ByteView payload) {
  ByteReader in(payload);
  ClaimAttestation a;
  a.applicant = ParticipantId{ledger::Digest(in.fixed<ledger::Digest::kSize>())};
  auto kind = in.u8();
  if (kind >= kClaimKindCount) throw DecodeError(DecodeErrc::BadTag, "claim kind");
  a.kind = static_cast<ClaimKind>(kind);
  a.record.claim_ref = ledger::Digest(in.fixed<ledger::Digest::kSize>());
  auto verdict = in.u8();
  if (verdict > static_cast<std::uint8_t>(Verdict::Unknown)) throw DecodeError(DecodeErrc::BadTag, "verdict");
  a.record.verdict = static_cast<Verdict>(verdict);
  a.record.attester = ParticipantId{ledger::Digest(in.fixed<ledger::Digest::kSize>())};
  a.record.attester_signature = registry::decode_signature(in);
  in.finish();
  return a;
}

}  // namespace hrchain::recruit
