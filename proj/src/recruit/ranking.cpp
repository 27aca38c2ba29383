#include "hrchain/recruit/ranking.hpp"

#include <algorithm>

namespace hrchain::recruit {

std::string_view to_string(DiscardReason reason) {
  switch (reason) {
    case DiscardReason::EvidenceMismatch: return "EvidenceMismatch";
    case DiscardReason::FakeCertificate: return "FakeCertificate";
    case DiscardReason::LawIssue: return "LawIssue";
    case DiscardReason::BehaviouralIssue: return "BehaviouralIssue";
    case DiscardReason::MandatoryUnmet: return "MandatoryUnmet";
  }
  return "Unknown";
}

namespace {

bool adverse(const Record& statement) {
  const auto* v = statement.find("adverse");
  return v != nullptr && *v == FieldValue{std::string("true")};
}

void check_alignment(const ApplicantProfile& profile, std::span<const VerificationRecord> records) {
  if (records.size() != profile.claims.size()) {
    throw RecruitError(RecruitErrc::MissingVerification,
                       std::to_string(profile.claims.size()) + " claims, " +
                           std::to_string(records.size()) + " records");
  }
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].claim_ref != profile.claims[i].evidence_hash) {
      throw RecruitError(RecruitErrc::MissingVerification, "claim " + std::to_string(i));
    }
  }
}

}  // namespace

std::optional<DiscardReason> screen(const ApplicantProfile& profile,
                                    std::span<const VerificationRecord> records) {
  check_alignment(profile, records);
  const auto& claims = profile.claims;
  auto any = [&](auto&& pred) {
    for (std::size_t i = 0; i < claims.size(); ++i) {
      if (pred(claims[i], records[i])) return true;
    }
    return false;
  };
  if (any([](const Claim& c, const VerificationRecord&) { return !c.evidence_matches(); })) {
    return DiscardReason::EvidenceMismatch;
  }
  if (any([](const Claim&, const VerificationRecord& r) { return r.verdict == Verdict::Refuted; })) {
    return DiscardReason::FakeCertificate;
  }
  auto confirmed_adverse = [&](ClaimKind kind) {
    return any([kind](const Claim& c, const VerificationRecord& r) {
      return c.kind == kind && r.verdict == Verdict::Confirmed && adverse(c.statement);
    });
  };
  if (confirmed_adverse(ClaimKind::CriminalRecord)) return DiscardReason::LawIssue;
  if (confirmed_adverse(ClaimKind::Performance)) return DiscardReason::BehaviouralIssue;
  return std::nullopt;
}

std::optional<Decimal> matching_score(const ApplicantProfile& profile,
                                      std::span<const VerificationRecord> records,
                                      const RequirementSpec& spec) {
  check_alignment(profile, records);
  Decimal score;
  for (const auto& item : spec.items) {
    bool satisfied = false;
    for (std::size_t i = 0; i < profile.claims.size() && !satisfied; ++i) {
      const auto& c = profile.claims[i];
      satisfied = c.kind == item.kind && records[i].verdict == Verdict::Confirmed &&
                  item.predicate.matches(c.statement);
    }
    if (satisfied) {
      score += item.weight;
    } else if (item.mandatory) {
      return std::nullopt;
    }
  }
  return score;
}

std::optional<std::size_t> RankedList::rank_of(const ParticipantId& applicant) const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].applicant == applicant) return i + 1;
  }
  return std::nullopt;
}

RankedList rank_verified(std::span<const ApplicantProfile> profiles,
                         std::span<const std::vector<VerificationRecord>> records,
                         const RequirementSpec& spec) {
  spec.validate();
  if (records.size() != profiles.size()) {
    throw RecruitError(RecruitErrc::MissingVerification, "record batches do not match profiles");
  }
  RankedList out;
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    const auto& profile = profiles[i];
    if (auto reason = screen(profile, records[i])) {
      out.discarded.push_back({profile.applicant, *reason});
      continue;
    }
    if (auto score = matching_score(profile, records[i], spec)) {
      out.entries.push_back({profile.applicant, *score});
    } else {
      out.discarded.push_back({profile.applicant, DiscardReason::MandatoryUnmet});
    }
  }
  std::stable_sort(out.entries.begin(), out.entries.end(),
                   [](const RankedEntry& a, const RankedEntry& b) {
                     if (a.score != b.score) return a.score > b.score;
                     return a.applicant < b.applicant;
                   });
  return out;
}

RankOutcome rank_applicants(std::span<const ApplicantProfile> applicants,
                            const registry::Directory& directory, const AuthorityPanel& panel,
                            const RequirementSpec& spec) {
  spec.validate();
  RankOutcome outcome;
  outcome.records.reserve(applicants.size());
  for (const auto& profile : applicants) {
    std::vector<VerificationRecord> batch;
    batch.reserve(profile.claims.size());
    for (const auto& claim : profile.claims) {
      try {
        batch.push_back(verify_claim(profile.applicant, claim, directory, panel));
      } catch (const registry::RegistryError& e) {
        if (e.code() != registry::RegistryErrc::NoAuthorityRegistered) throw;
        batch.push_back(unattested_record(claim));
      }
    }
    outcome.records.push_back(std::move(batch));
  }
  outcome.list = rank_verified(applicants, outcome.records, spec);
  return outcome;
}

}  // namespace hrchain::recruit
