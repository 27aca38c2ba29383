#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hrchain/common/record.hpp"
#include "hrchain/ledger/digest.hpp"
#include "hrchain/registry/identity.hpp"

namespace hrchain::recruit {

using registry::ParticipantId;

enum class ClaimKind : std::uint8_t {
  Education = 0,
  Employment = 1,
  Training = 2,
  Certificate = 3,
  SalaryHistory = 4,
  Performance = 5,
  HealthRecord = 6,
  CriminalRecord = 7,
};

inline constexpr std::size_t kClaimKindCount = 8;

std::string_view to_string(ClaimKind kind);
std::optional<ClaimKind> parse_claim_kind(std::string_view text);

/// An applicant's assertion, naming the authority expected to vouch for it.
struct Claim {
  ClaimKind kind = ClaimKind::Education;
  ParticipantId issuer;
  Record statement;
  ledger::Digest evidence_hash;

  /// Builds a claim with evidence_hash = double_hash(statement bytes).
  static Claim make(ClaimKind kind, ParticipantId issuer, Record statement);
  bool evidence_matches() const;

  friend bool operator==(const Claim&, const Claim&) = default;
};

struct ApplicantProfile {
  ParticipantId applicant;
  std::vector<Claim> claims;

  friend bool operator==(const ApplicantProfile&, const ApplicantProfile&) = default;
};

}  // namespace hrchain::recruit
