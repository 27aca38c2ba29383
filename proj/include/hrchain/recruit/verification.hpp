#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "hrchain/common/error.hpp"
#include "hrchain/common/record.hpp"
#include "hrchain/ledger/digest.hpp"
#include "hrchain/recruit/claim.hpp"
#include "hrchain/registry/directory.hpp"
#include "hrchain/registry/keys.hpp"

namespace hrchain::recruit {

enum class RecruitErrc {
  MissingVerification,
  SignatureFailure,
  ParseError,
  EmptyRequirementSpec,
};

std::string_view to_string(RecruitErrc code);

using RecruitError = CodedError<RecruitErrc>;

enum class Verdict : std::uint8_t { Confirmed = 0, Refuted = 1, Unknown = 2 };

std::string_view to_string(Verdict verdict);

/// An authority's signed verdict on one claim.
struct VerificationRecord {
  ledger::Digest claim_ref;  // the claim's evidence_hash
  Verdict verdict = Verdict::Unknown;
  ParticipantId attester;    // zero when no authority could be resolved
  registry::Signature attester_signature;

  bool attested() const { return !attester.is_zero(); }

  friend bool operator==(const VerificationRecord&, const VerificationRecord&) = default;
};

/// Bytes covered by attester_signature: (claim_ref, verdict).
Bytes verdict_message(const ledger::Digest& claim_ref, Verdict verdict);
bool verify_record(const VerificationRecord& record);

/// Record used when no authority is registered for a claim: Unknown,
/// unsigned, never notarized.
VerificationRecord unattested_record(const Claim& claim);

/// An authority's local database of facts about applicants.
class AuthorityStore {
 public:
  void add(const ParticipantId& applicant, ClaimKind kind, Record statement);

  /// Confirmed if a stored record for (applicant, claim.kind) hashes to the
  /// claim's evidence_hash; Refuted if records exist but none matches;
  /// Unknown if the authority holds nothing for that pair.
  Verdict lookup(const ParticipantId& applicant, const Claim& claim) const;

  std::size_t size() const;

 private:
  std::map<std::pair<ParticipantId, ClaimKind>, std::vector<ledger::Digest>> records_;
};

/// An authority's signing keys together with its record store.
struct Attester {
  registry::KeyPair keys;
  AuthorityStore store;
};

using AuthorityPanel = std::map<ParticipantId, Attester>;

/// Verdict from a specific authority, signed with its keys.
VerificationRecord attest(const ParticipantId& applicant, const Claim& claim,
                          const registry::KeyPair& keys, const AuthorityStore& store);

/// Resolves the responsible authority with registry::authority_for and
/// asks it. Throws RegistryError{NoAuthorityRegistered} when the authority
/// is unknown or absent from `panel`, RecruitError{SignatureFailure} if the
/// produced record does not verify.
VerificationRecord verify_claim(const ParticipantId& applicant, const Claim& claim,
                                const registry::Directory& directory, const AuthorityPanel& panel);

/// Payload of a ClaimAttestation transaction.
struct ClaimAttestation {
  ParticipantId applicant;
  ClaimKind kind = ClaimKind::Education;
  VerificationRecord record;

  Bytes encode() const;
  static ClaimAttestation decode(ByteView payload);

  friend bool operator==(const ClaimAttestation&, const ClaimAttestation&) = default;
};

}  // namespace hrchain::recruit
