#include "hrchain/registry/permission.hpp"

#include <array>

namespace hrchain::registry {

namespace {
constexpr std::array<std::pair<Role, std::string_view>, 5> kRoleNames{{
    {Role::RecruitingCompany, "RecruitingCompany"},
    {Role::Employer, "Employer"},
    {Role::Applicant, "Applicant"},
    {Role::HealthAuthority, "HealthAuthority"},
    {Role::LawAgency, "LawAgency"},
}};

constexpr std::array<std::pair<Right, std::string_view>, 4> kRightNames{{
    {Right::Connect, "connect"},
    {Right::Send, "send"},
    {Right::Mine, "mine"},
    {Right::Attest, "attest"},
}};
}  // namespace

std::string_view to_string(Role role) {
  for (const auto& [r, name] : kRoleNames) {
    if (r == role) return name;
  }
  return "Unknown";
}

std::optional<Role> parse_role(std::string_view text) {
  for (const auto& [r, name] : kRoleNames) {
    if (name == text) return r;
  }
  return std::nullopt;
}

bool is_authority_role(Role role) {
  return role == Role::Employer || role == Role::HealthAuthority || role == Role::LawAgency;
}

std::optional<Rights> Rights::from_bits(std::uint8_t bits) {
  if ((bits & ~kAllBits) != 0) return std::nullopt;
  Rights r;
  r.bits_ = bits;
  return r;
}

std::optional<Rights> Rights::parse(std::string_view text) {
  Rights out;
  if (text == "none") return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('+', start);
    if (end == std::string_view::npos) end = text.size();
    auto token = text.substr(start, end - start);
    bool found = false;
    for (const auto& [r, name] : kRightNames) {
      if (name == token) {
        out = out | Rights{r};
        found = true;
      }
    }
    if (!found) return std::nullopt;
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::string Rights::to_string() const {
  std::string out;
  for (const auto& [r, name] : kRightNames) {
    if (!has(r)) continue;
    if (!out.empty()) out += '+';
    out += name;
  }
  return out.empty() ? "none" : out;
}

Bytes PermissionGrant::encode() const {
  ByteWriter w;
  w.u32(static_cast<std::uint32_t>(entries.size()));
  for (const auto& e : entries) {
    w.raw(e.subject.value.view());
    w.u8(static_cast<std::uint8_t>(e.role));
    w.bytes16(e.public_key);
    w.u8(e.rights.bits());
  }
  return std::move(w).take();
}

PermissionGrant PermissionGrant::decode(ByteView payload) {
  ByteReader in(payload);
  PermissionGrant grant;
  auto count = in.u32();
  for (std::uint32_t i = 0; i < count; ++i) {
    GrantEntry e;
    e.subject = ParticipantId{ledger::Digest(in.fixed<ledger::Digest::kSize>())};
    auto role = in.u8();
    if (role > static_cast<std::uint8_t>(Role::LawAgency)) throw DecodeError(DecodeErrc::BadTag, "role");
    e.role = static_cast<Role>(role);
    e.public_key = in.bytes16();
    auto rights = Rights::from_bits(in.u8());
    if (!rights) throw DecodeError(DecodeErrc::BadTag, "rights");
    e.rights = *rights;
    grant.entries.push_back(std::move(e));
  }
  in.finish();
  return grant;
}

}  // namespace hrchain::registry
