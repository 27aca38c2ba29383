#pragma once

#include <array>
#include <string_view>

#include "hrchain/common/record.hpp"
#include "hrchain/registry/identity.hpp"
#include "hrchain/registry/keys.hpp"

namespace hrchain::hrm {

using registry::ParticipantId;

/// Section headings of an employment contract, in canonical order.
inline constexpr std::array<std::string_view, 5> kContractSections{
    "Personal Information", "Previous job information", "Company Information", "Company terms",
    "Employee terms",
};

/// Employment contract signed by both parties. Section contents are opaque
/// canonical records.
struct EmploymentContract {
  Record personal_info;
  Record previous_job_info;
  Record company_info;
  Record company_terms;
  Record employee_terms;
  ParticipantId employee;
  ParticipantId employer;
  registry::Signature employee_signature;
  registry::Signature employer_signature;

  /// Section by index into kContractSections.
  const Record& section(std::size_t index) const;
  Record& section(std::size_t index);

  /// Bytes both parties sign: the five sections in order, then the
  /// employee and employer ids.
  Bytes body_bytes() const;
  void sign_as_employee(const registry::KeyPair& keys);
  void sign_as_employer(const registry::KeyPair& keys);
  bool signatures_valid() const;

  /// ContractRecord payload: body followed by both signatures.
  Bytes encode() const;
  static EmploymentContract decode(ByteView payload);

  friend bool operator==(const EmploymentContract&, const EmploymentContract&) = default;
};

}  // namespace hrchain::hrm
