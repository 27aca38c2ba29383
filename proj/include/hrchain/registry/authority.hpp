#pragma once

#include "hrchain/recruit/claim.hpp"
#include "hrchain/registry/directory.hpp"

namespace hrchain::registry {

/// Participant responsible for attesting a claim of `kind`.
///
///  - Employment, SalaryHistory, Performance, Education, Training and
///    Certificate claims go to the named issuer, which must be a registered
///    Employer holding Attest.
///  - HealthRecord goes to the first HealthAuthority holding Attest.
///  - CriminalRecord goes to the first LawAgency holding Attest.
///
/// Throws RegistryError{NoAuthorityRegistered} otherwise.
ParticipantId authority_for(recruit::ClaimKind kind, const ParticipantId& named_issuer,
                            const Directory& directory);

}  // namespace hrchain::registry
