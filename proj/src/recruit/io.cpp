#include "hrchain/recruit/io.hpp"

#include <iomanip>
#include <map>

namespace hrchain::recruit {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto end = s.find(sep, start);
    if (end == std::string_view::npos) {
      out.push_back(trim(s.substr(start)));
      return out;
    }
    out.push_back(trim(s.substr(start, end - start)));
    start = end + 1;
  }
}

[[noreturn]] void fail(std::size_t line, const std::string& why) {
  throw RecruitError(RecruitErrc::ParseError, "line " + std::to_string(line) + ": " + why);
}

/// Calls fn(line_no, columns) for every data line. A first line whose
/// first column equals `header` is skipped.
template <typename Fn>
void for_each_row(std::string_view text, std::string_view header, std::size_t columns, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  bool first = true;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto cols = split(line, ',');
    if (first && cols.front() == header) {
      first = false;
      continue;
    }
    first = false;
    if (cols.size() != columns) {
      fail(line_no, "expected " + std::to_string(columns) + " columns, got " + std::to_string(cols.size()));
    }
    fn(line_no, cols);
  }
}

ParticipantId resolve(const registry::NameBook& names, std::string_view name, std::size_t line) {
  auto id = names.id_of(name);
  if (!id) fail(line, "unknown participant '" + std::string(name) + "'");
  return *id;
}

ClaimKind kind_of(std::string_view text, std::size_t line) {
  auto kind = parse_claim_kind(text);
  if (!kind) fail(line, "unknown claim kind '" + std::string(text) + "'");
  return *kind;
}

Record record_of(std::string_view text, std::size_t line) {
  auto record = Record::parse(text);
  if (!record) fail(line, "malformed fields '" + std::string(text) + "'");
  return *record;
}

}  // namespace

std::vector<ApplicantProfile> parse_applicants(std::string_view text, const registry::NameBook& names) {
  std::vector<ApplicantProfile> profiles;
  std::map<ParticipantId, std::size_t> index;
  for_each_row(text, "applicant", 4, [&](std::size_t line, const auto& cols) {
    auto applicant = resolve(names, cols[0], line);
    // Empty or '-' issuer: nobody vouches for the claim.
    const bool no_issuer = cols[2].empty() || cols[2] == "-";
    auto issuer = no_issuer ? ParticipantId{} : resolve(names, cols[2], line);
    auto claim = Claim::make(kind_of(cols[1], line), issuer, record_of(cols[3], line));
    auto [it, inserted] = index.emplace(applicant, profiles.size());
    if (inserted) profiles.push_back(ApplicantProfile{applicant, {}});
    profiles[it->second].claims.push_back(std::move(claim));
  });
  return profiles;
}

RequirementSpec parse_requirements(std::string_view text, const ParticipantId& company) {
  RequirementSpec spec;
  spec.company = company;
  for_each_row(text, "kind", 4, [&](std::size_t line, const auto& cols) {
    RequirementItem item;
    item.kind = kind_of(cols[0], line);
    auto predicate = Predicate::parse(cols[1]);
    if (!predicate) fail(line, "malformed predicate '" + std::string(cols[1]) + "'");
    item.predicate = *predicate;
    auto weight = Decimal::parse(cols[2]);
    if (!weight) fail(line, "weight must be a non-negative decimal");
    item.weight = *weight;
    if (cols[3] == "true") {
      item.mandatory = true;
    } else if (cols[3] != "false") {
      fail(line, "mandatory must be true or false");
    }
    spec.items.push_back(std::move(item));
  });
  return spec;
}

std::vector<AuthorityRecordLine> parse_authority_records(std::string_view text,
                                                         const registry::NameBook& names) {
  std::vector<AuthorityRecordLine> out;
  for_each_row(text, "authority", 4, [&](std::size_t line, const auto& cols) {
    out.push_back(AuthorityRecordLine{resolve(names, cols[0], line), resolve(names, cols[1], line),
                                      kind_of(cols[2], line), record_of(cols[3], line)});
  });
  return out;
}

void write_ranked_list(std::ostream& out, const RankedList& list, const registry::NameBook& names,
                       OutputFormat format) {
  if (format == OutputFormat::Csv) {
    out << "rank,applicant,score\n";
    for (std::size_t i = 0; i < list.entries.size(); ++i) {
      out << (i + 1) << ',' << names.name_of(list.entries[i].applicant) << ','
          << list.entries[i].score.to_string() << '\n';
    }
    if (!list.discarded.empty()) {
      out << "discarded\napplicant,reason\n";
      for (const auto& d : list.discarded) {
        out << names.name_of(d.applicant) << ',' << to_string(d.reason) << '\n';
      }
    }
    return;
  }
  out << std::left << std::setw(6) << "rank" << std::setw(20) << "applicant" << "score\n";
  for (std::size_t i = 0; i < list.entries.size(); ++i) {
    out << std::left << std::setw(6) << (i + 1) << std::setw(20)
        << names.name_of(list.entries[i].applicant) << list.entries[i].score.to_string() << '\n';
  }
  if (!list.discarded.empty()) {
    out << "\ndiscarded:\n";
    for (const auto& d : list.discarded) {
      out << "  " << std::left << std::setw(20) << names.name_of(d.applicant) << to_string(d.reason)
          << '\n';
    }
  }
}

RankedList parse_ranked_list(std::string_view text, const registry::NameBook& names) {
  RankedList list;
  bool discarded = false;
  std::size_t line_no = 0, start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line == "rank,applicant,score" || line == "applicant,reason") continue;
    if (line == "discarded") {
      discarded = true;
      continue;
    }
    auto cols = split(line, ',');
    if (discarded) {
      if (cols.size() != 2) fail(line_no, "expected applicant,reason");
      std::optional<DiscardReason> reason;
      for (auto r : {DiscardReason::EvidenceMismatch, DiscardReason::FakeCertificate, DiscardReason::LawIssue,
                     DiscardReason::BehaviouralIssue, DiscardReason::MandatoryUnmet}) {
        if (to_string(r) == cols[1]) reason = r;
      }
      if (!reason) fail(line_no, "unknown discard reason '" + std::string(cols[1]) + "'");
      list.discarded.push_back({resolve(names, cols[0], line_no), *reason});
      continue;
    }
    if (cols.size() != 3) fail(line_no, "expected rank,applicant,score");
    if (cols[0] != std::to_string(list.entries.size() + 1)) fail(line_no, "ranks must count up from 1");
    auto score = Decimal::parse(cols[2]);
    if (!score) fail(line_no, "malformed score");
    list.entries.push_back({resolve(names, cols[1], line_no), *score});
  }
  return list;
}

}  // namespace hrchain::recruit
