#include "hrchain/hrm/hire.hpp"

#include <algorithm>

namespace hrchain::hrm {

std::string_view to_string(HrmErrc code) {
  switch (code) {
    case HrmErrc::BadSignature: return "BadSignature";
    case HrmErrc::UnknownParticipant: return "UnknownParticipant";
    case HrmErrc::ConsensusStalled: return "ConsensusStalled";
    case HrmErrc::NotCurrentEmployer: return "NotCurrentEmployer";
    case HrmErrc::NotInRankedList: return "NotInRankedList";
    case HrmErrc::PartyMismatch: return "PartyMismatch";
    case HrmErrc::ParseError: return "ParseError";
  }
  return "HrmError";
}

void EmploymentIndex::apply(const ledger::Block& block) {
  for (const auto& tx : block.transactions) {
    try {
      if (tx.kind == ledger::TxKind::ContractRecord) {
        auto c = EmploymentContract::decode(tx.payload);
        employer_[c.employee] = c.employer;
      } else if (tx.kind == ledger::TxKind::HrEventRecord) {
        auto e = HrEventRecord::decode(tx.payload);
        auto it = employer_.find(e.subject);
        if (e.terminates_employment() && it != employer_.end() && it->second == e.issuer) {
          employer_.erase(it);
        }
      }
    } catch (const DecodeError&) {
      // Malformed payloads carry no employment meaning.
    }
  }
}

std::optional<ParticipantId> EmploymentIndex::employer_of(const ParticipantId& subject) const {
  auto it = employer_.find(subject);
  if (it == employer_.end()) return std::nullopt;
  return it->second;
}

EmploymentIndex build_employment_index(std::span<const ledger::Block> blocks) {
  EmploymentIndex index;
  for (const auto& b : blocks) index.apply(b);
  return index;
}

std::optional<ParticipantId> current_employer(const ParticipantId& subject,
                                              std::span<const ledger::Block> blocks) {
  return build_employment_index(blocks).employer_of(subject);
}

std::uint64_t next_nonce(const ParticipantId& author, std::span<const ledger::Block> blocks) {
  std::uint64_t next = 0;
  for (const auto& b : blocks) {
    for (const auto& tx : b.transactions) {
      if (tx.author == author) next = std::max(next, tx.nonce + 1);
    }
  }
  return next;
}

void check_hire(const HireDecision& decision, const EmploymentContract& contract,
                const recruit::RankedList& ranking, const registry::Directory& directory) {
  if (contract.employer != decision.company || contract.employee != decision.applicant) {
    throw HrmError(HrmErrc::PartyMismatch);
  }
  if (directory.find(contract.employee) == nullptr) {
    throw HrmError(HrmErrc::UnknownParticipant, "employee " + contract.employee.short_hex());
  }
  if (directory.find(contract.employer) == nullptr) {
    throw HrmError(HrmErrc::UnknownParticipant, "employer " + contract.employer.short_hex());
  }
  if (!contract.signatures_valid()) throw HrmError(HrmErrc::BadSignature, "contract");
  auto rank = ranking.rank_of(decision.applicant);
  if (!rank || *rank != decision.source_rank) {
    throw HrmError(HrmErrc::NotInRankedList, decision.applicant.short_hex());
  }
}

void check_hr_event(const HrEventRecord& event, std::span<const ledger::Block> blocks) {
  if (!event.signature_valid()) throw HrmError(HrmErrc::BadSignature, "hr event");
  auto employer = current_employer(event.subject, blocks);
  if (!employer || *employer != event.issuer) {
    throw HrmError(HrmErrc::NotCurrentEmployer, event.issuer.short_hex());
  }
}

ledger::Transaction make_contract_tx(const EmploymentContract& contract,
                                     const registry::KeyPair& employer_keys, std::uint64_t nonce) {
  return ledger::make_transaction(ledger::TxKind::ContractRecord, contract.encode(), employer_keys,
                                  nonce);
}

ledger::Transaction make_hr_event_tx(const HrEventRecord& event,
                                     const registry::KeyPair& issuer_keys, std::uint64_t nonce) {
  return ledger::make_transaction(ledger::TxKind::HrEventRecord, event.encode(), issuer_keys, nonce);
}

namespace {

void commit_one(ledger::Chain& chain, ledger::Transaction tx, consensus::LocalConsensus& consensus,
                std::uint64_t timestamp) {
  try {
    consensus.commit(chain, {std::move(tx)}, std::max(timestamp, chain.tip().header.timestamp));
  } catch (const consensus::ConsensusError& e) {
    if (e.code() == consensus::ConsensusErrc::ConsensusStalled) {
      throw HrmError(HrmErrc::ConsensusStalled, e.what());
    }
    throw;
  }
}

}  // namespace

ledger::Chain record_hire(const HireDecision& decision, const EmploymentContract& contract,
                          const recruit::RankedList& ranking,
                          const registry::KeyPair& employer_keys, ledger::Chain chain,
                          consensus::LocalConsensus& consensus, std::uint64_t timestamp) {
  Hire hire{decision, contract};
  return record_hires(std::span<const Hire>(&hire, 1), ranking, employer_keys, std::move(chain),
                      consensus, timestamp);
}

ledger::Chain record_hires(std::span<const Hire> hires, const recruit::RankedList& ranking,
                           const registry::KeyPair& employer_keys, ledger::Chain chain,
                           consensus::LocalConsensus& consensus, std::uint64_t timestamp) {
  for (const auto& hire : hires) {
    if (employer_keys.id() != hire.decision.company) throw HrmError(HrmErrc::PartyMismatch, "signer");
    check_hire(hire.decision, hire.contract, ranking, registry::replay_directory(chain));
    auto tx = make_contract_tx(hire.contract, employer_keys, next_nonce(employer_keys.id(), chain.blocks()));
    commit_one(chain, std::move(tx), consensus, timestamp);
  }
  return chain;
}

ledger::Chain record_hr_event(const HrEventRecord& event, const registry::KeyPair& issuer_keys,
                              ledger::Chain chain, consensus::LocalConsensus& consensus,
                              std::uint64_t timestamp) {
  if (issuer_keys.id() != event.issuer) throw HrmError(HrmErrc::PartyMismatch, "signer");
  check_hr_event(event, chain.blocks());
  auto tx = make_hr_event_tx(event, issuer_keys, next_nonce(issuer_keys.id(), chain.blocks()));
  commit_one(chain, std::move(tx), consensus, timestamp);
  return chain;
}

}  // namespace hrchain::hrm
