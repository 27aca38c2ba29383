#pragma once

#include <string_view>

#include "hrchain/hrm/contract.hpp"
#include "hrchain/registry/roster.hpp"

namespace hrchain::hrm {

/// Contract input file:
///
///   employee=alice
///   employer=acme
///   [Personal Information]
///   name=Alice
///   ...
///
/// Party names resolve through `names`; sections may appear in any order,
/// each at most once, and missing sections stay empty. Fields are one
/// `key=value` per line. Throws HrmError{ParseError} or
/// HrmError{UnknownParticipant}. Signatures are left empty.
EmploymentContract parse_contract(std::string_view text, const registry::NameBook& names);

/// Inverse of parse_contract (unsigned body only).
std::string format_contract(const EmploymentContract& contract, const registry::NameBook& names);

}  // namespace hrchain::hrm
