#pragma once

#include <ostream>
#include <string_view>
#include <vector>

#include "hrchain/recruit/ranking.hpp"
#include "hrchain/recruit/requirement.hpp"
#include "hrchain/registry/roster.hpp"

namespace hrchain::recruit {

enum class OutputFormat { Text, Csv };

/// Applicant claims, one per line: `applicant,kind,issuer,field=value;...`.
/// Profiles are returned in order of each applicant's first line.
/// Throws RecruitError{ParseError} naming the line.
std::vector<ApplicantProfile> parse_applicants(std::string_view text, const registry::NameBook& names);

/// Requirement items, one per line: `kind,predicate,weight,mandatory`.
RequirementSpec parse_requirements(std::string_view text, const ParticipantId& company);

/// One fact in an authority's store.
struct AuthorityRecordLine {
  ParticipantId authority;
  ParticipantId applicant;
  ClaimKind kind = ClaimKind::Education;
  Record statement;
};

/// Authority records, one per line: `authority,applicant,kind,field=value;...`.
std::vector<AuthorityRecordLine> parse_authority_records(std::string_view text,
                                                         const registry::NameBook& names);

/// `rank,applicant,score` rows; when anything was discarded, a `discarded`
/// marker line follows with `applicant,reason` rows.
void write_ranked_list(std::ostream& out, const RankedList& list, const registry::NameBook& names,
                       OutputFormat format);

/// Reads the csv form of write_ranked_list back.
RankedList parse_ranked_list(std::string_view text, const registry::NameBook& names);

}  // namespace hrchain::recruit
