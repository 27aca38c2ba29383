#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hrchain/common/decimal.hpp"
#include "hrchain/recruit/claim.hpp"
#include "hrchain/recruit/requirement.hpp"
#include "hrchain/recruit/verification.hpp"
#include "hrchain/registry/directory.hpp"

namespace hrchain::recruit {

/// Why a profile left the ranking. Screening reasons are checked in
/// declaration order; MandatoryUnmet comes from scoring.
enum class DiscardReason : std::uint8_t {
  EvidenceMismatch,  // evidence_hash does not hash the statement
  FakeCertificate,   // an authority refuted a claim
  LawIssue,          // confirmed CriminalRecord with adverse=true
  BehaviouralIssue,  // confirmed Performance with adverse=true
  MandatoryUnmet,    // a mandatory requirement item is not satisfied
};

std::string_view to_string(DiscardReason reason);

/// nullopt means Pass. `records[i]` must verify `profile.claims[i]`;
/// otherwise throws RecruitError{MissingVerification}.
std::optional<DiscardReason> screen(const ApplicantProfile& profile,
                                    std::span<const VerificationRecord> records);

/// Sum of weights over satisfied items. An item is satisfied when a
/// Confirmed claim of its kind matches its predicate. nullopt when a
/// mandatory item is unsatisfied (Disqualified).
std::optional<Decimal> matching_score(const ApplicantProfile& profile,
                                      std::span<const VerificationRecord> records,
                                      const RequirementSpec& spec);

struct RankedEntry {
  ParticipantId applicant;
  Decimal score;
  friend bool operator==(const RankedEntry&, const RankedEntry&) = default;
};

struct DiscardedEntry {
  ParticipantId applicant;
  DiscardReason reason = DiscardReason::FakeCertificate;
  friend bool operator==(const DiscardedEntry&, const DiscardedEntry&) = default;
};

/// Entries by descending score, ties by ascending applicant id bytes.
/// Discarded profiles keep input order.
struct RankedList {
  std::vector<RankedEntry> entries;
  std::vector<DiscardedEntry> discarded;

  /// 1-based position in `entries`.
  std::optional<std::size_t> rank_of(const ParticipantId& applicant) const;

  friend bool operator==(const RankedList&, const RankedList&) = default;
};

/// Screen, score and sort profiles whose claims are already verified.
/// `records[i]` holds the records for `profiles[i]`.
RankedList rank_verified(std::span<const ApplicantProfile> profiles,
                         std::span<const std::vector<VerificationRecord>> records,
                         const RequirementSpec& spec);

struct RankOutcome {
  RankedList list;
  /// Per profile, per claim; the attested ones are what gets notarized.
  std::vector<std::vector<VerificationRecord>> records;
};

/// Verify every claim of every applicant against its authority, then
/// rank. A claim with no resolvable authority gets an Unknown record
/// instead of aborting the batch.
RankOutcome rank_applicants(std::span<const ApplicantProfile> applicants,
                            const registry::Directory& directory, const AuthorityPanel& panel,
                            const RequirementSpec& spec);

}  // namespace hrchain::recruit
