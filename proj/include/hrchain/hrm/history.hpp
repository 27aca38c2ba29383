#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <variant>
#include <vector>

#include "hrchain/hrm/contract.hpp"
#include "hrchain/hrm/hr_event.hpp"
#include "hrchain/ledger/block.hpp"
#include "hrchain/ledger/digest.hpp"
#include "hrchain/recruit/verification.hpp"
#include "hrchain/registry/roster.hpp"

namespace hrchain::hrm {

using HistoryRecord = std::variant<EmploymentContract, HrEventRecord, recruit::ClaimAttestation>;

struct HistoryEntry {
  std::uint64_t height = 0;
  ledger::TxKind kind = ledger::TxKind::ContractRecord;
  ledger::Digest tx_id;
  Bytes payload;
  HistoryRecord record;

  friend bool operator==(const HistoryEntry&, const HistoryEntry&) = default;
};

/// Committed records naming `subject` as employee, employer, HR subject,
/// HR issuer or attested applicant, in commit order.
std::vector<HistoryEntry> query_history(const ParticipantId& subject,
                                        std::span<const ledger::Block> blocks);

/// `height,kind,subject,details_hash` rows; details_hash is the double
/// hash of the transaction payload.
void write_history_csv(std::ostream& out, const ParticipantId& subject,
                       std::span<const HistoryEntry> entries, const registry::NameBook& names);

}  // namespace hrchain::hrm
