#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hrchain/common/bytes.hpp"
#include "hrchain/registry/identity.hpp"

namespace hrchain::registry {

enum class Role : std::uint8_t {
  RecruitingCompany = 0,
  Employer = 1,
  Applicant = 2,
  HealthAuthority = 3,
  LawAgency = 4,
};

std::string_view to_string(Role role);
std::optional<Role> parse_role(std::string_view text);

/// Roles allowed to hold the Attest right.
bool is_authority_role(Role role);

enum class Right : std::uint8_t {
  Connect = 1,
  Send = 2,
  Mine = 4,
  Attest = 8,
};

class Rights {
 public:
  static constexpr std::uint8_t kAllBits = 0x0f;

  constexpr Rights() = default;
  constexpr Rights(std::initializer_list<Right> rights) {
    for (auto r : rights) bits_ |= static_cast<std::uint8_t>(r);
  }
  static std::optional<Rights> from_bits(std::uint8_t bits);
  /// `connect+send+mine`, or `none` for the empty set.
  static std::optional<Rights> parse(std::string_view text);

  constexpr bool has(Right r) const { return (bits_ & static_cast<std::uint8_t>(r)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint8_t bits() const { return bits_; }
  std::string to_string() const;

  friend constexpr Rights operator|(Rights a, Rights b) {
    Rights r;
    r.bits_ = a.bits_ | b.bits_;
    return r;
  }
  friend constexpr bool operator==(Rights, Rights) = default;

 private:
  std::uint8_t bits_ = 0;
};

/// One permission assignment inside a PermissionGrant transaction. The
/// subject's role and public key ride along so replaying the chain rebuilds
/// the whole directory. Empty rights revoke the grantor's earlier grant.
struct GrantEntry {
  ParticipantId subject;
  Role role = Role::Applicant;
  Bytes public_key;
  Rights rights;

  friend bool operator==(const GrantEntry&, const GrantEntry&) = default;
};

/// Payload of a PermissionGrant transaction; the grantor is the author.
struct PermissionGrant {
  std::vector<GrantEntry> entries;

  Bytes encode() const;
  static PermissionGrant decode(ByteView payload);

  friend bool operator==(const PermissionGrant&, const PermissionGrant&) = default;
};

}  // namespace hrchain::registry
