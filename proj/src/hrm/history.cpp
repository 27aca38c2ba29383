#include "hrchain/hrm/history.hpp"

#include "hrchain/ledger/hash.hpp"
#include "hrchain/ledger/transaction.hpp"

namespace hrchain::hrm {

namespace {

std::optional<HistoryRecord> decode_record(const ledger::Transaction& tx) {
  try {
    switch (tx.kind) {
      case ledger::TxKind::ContractRecord: return EmploymentContract::decode(tx.payload);
      case ledger::TxKind::HrEventRecord: return HrEventRecord::decode(tx.payload);
      case ledger::TxKind::ClaimAttestation: return recruit::ClaimAttestation::decode(tx.payload);
      case ledger::TxKind::PermissionGrant: return std::nullopt;
    }
  } catch (const DecodeError&) {
  }
  return std::nullopt;
}

bool references(const HistoryRecord& record, const ParticipantId& subject) {
  struct {
    const ParticipantId& s;
    bool operator()(const EmploymentContract& c) const { return c.employee == s || c.employer == s; }
    bool operator()(const HrEventRecord& e) const { return e.subject == s || e.issuer == s; }
    bool operator()(const recruit::ClaimAttestation& a) const { return a.applicant == s; }
  } visit{subject};
  return std::visit(visit, record);
}

}  // namespace

std::vector<HistoryEntry> query_history(const ParticipantId& subject,
                                        std::span<const ledger::Block> blocks) {
  std::vector<HistoryEntry> out;
  for (const auto& block : blocks) {
    for (const auto& tx : block.transactions) {
      auto record = decode_record(tx);
      if (!record || !references(*record, subject)) continue;
      out.push_back({block.header.height, tx.kind, ledger::tx_id(tx), tx.payload, std::move(*record)});
    }
  }
  return out;
}

void write_history_csv(std::ostream& out, const ParticipantId& subject,
                       std::span<const HistoryEntry> entries, const registry::NameBook& names) {
  out << "height,kind,subject,details_hash\n";
  auto who = names.name_of(subject);
  for (const auto& e : entries) {
    out << e.height << ',' << ledger::to_string(e.kind) << ',' << who << ','
        << ledger::double_hash(e.payload).hex() << '\n';
  }
}

}  // namespace hrchain::hrm
