#include "hrchain/recruit/claim.hpp"

#include <array>

#include "hrchain/ledger/hash.hpp"

namespace hrchain::recruit {

namespace {
constexpr std::array<std::string_view, kClaimKindCount> kNames{
    "Education",     "Employment",  "Training",     "Certificate",
    "SalaryHistory", "Performance", "HealthRecord", "CriminalRecord",
};
}  // namespace

std::string_view to_string(ClaimKind kind) {
  auto idx = static_cast<std::size_t>(kind);
  return idx < kNames.size() ? kNames[idx] : "Unknown";
}

std::optional<ClaimKind> parse_claim_kind(std::string_view text) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == text) return static_cast<ClaimKind>(i);
  }
  return std::nullopt;
}

Claim Claim::make(ClaimKind kind, ParticipantId issuer, Record statement) {
  Claim c;
  c.kind = kind;
  c.issuer = issuer;
  c.evidence_hash = ledger::double_hash(statement.encode());
  c.statement = std::move(statement);
  return c;
}

bool Claim::evidence_matches() const {
  return ledger::double_hash(statement.encode()) == evidence_hash;
}

}  // namespace hrchain::recruit
