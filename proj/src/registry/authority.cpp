#include "hrchain/registry/authority.hpp"

#include <string>

namespace hrchain::registry {

namespace {

ParticipantId first_with_role(Role role, const Directory& directory) {
  for (const auto& p : directory.participants()) {
    if (p.role == role && p.rights.has(Right::Attest)) return p.id;
  }
  throw RegistryError(RegistryErrc::NoAuthorityRegistered, std::string(to_string(role)));
}

}  // namespace

ParticipantId authority_for(recruit::ClaimKind kind, const ParticipantId& named_issuer,
                            const Directory& directory) {
  using recruit::ClaimKind;
  switch (kind) {
    case ClaimKind::HealthRecord:
      return first_with_role(Role::HealthAuthority, directory);
    case ClaimKind::CriminalRecord:
      return first_with_role(Role::LawAgency, directory);
    case ClaimKind::Education:
    case ClaimKind::Employment:
    case ClaimKind::Training:
    case ClaimKind::Certificate:
    case ClaimKind::SalaryHistory:
    case ClaimKind::Performance: {
      const auto* p = directory.find(named_issuer);
      if (p != nullptr && p->role == Role::Employer && p->rights.has(Right::Attest)) return p->id;
      throw RegistryError(RegistryErrc::NoAuthorityRegistered,
                          std::string(recruit::to_string(kind)) + " issuer " +
                              named_issuer.short_hex());
    }
  }
  throw RegistryError(RegistryErrc::NoAuthorityRegistered);
}

}  // namespace hrchain::registry
