#pragma once

#include <string_view>

#include "hrchain/simnet/scenario.hpp"

namespace hrchain::simnet {

/// Parses a scenario file. Grammar (blank lines and `#` comments ignored):
///
///   [roster]      role,name,key_hex[,host]      (registry roster lines)
///   [consensus]   diversity = 0.75
///                 miners = a,b,c
///                 inactive = name@from-to       (`to` may be `inf`; repeatable)
///                 batch_contracts = true|false
///                 max_block_txs = 16
///   [network]     seed, latency, tick_limit, reorder = integers
///                 loss = decimal probability
///   [script]      <tick> <verb> <args...>, whitespace separated:
///                   record  <authority> <applicant> <Kind> <fields>
///                   claim   <applicant> <Kind> <issuer|-> <fields>
///                   apply   <applicant> <company>
///                   require <company> <Kind> <predicate> <weight> <true|false>
///                   rank    <company>
///                   hire    <company> <applicant> [section:fields ...]
///                   event   <issuer> <subject> <HrKind> <fields>
///                   grant   <grantor> <subject> <rights>
///
/// `fields` is `name=value;name=value` or `-` for none. Hire sections are
/// personal, previous_job, company, company_terms, employee_terms.
/// Script steps keep file order; ticks must not decrease.
/// Throws SimnetError{MalformedScenario} with the line number.
Scenario parse_scenario(std::string_view text);

}  // namespace hrchain::simnet
