#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hrchain/common/error.hpp"
#include "hrchain/consensus/local_consensus.hpp"
#include "hrchain/hrm/contract.hpp"
#include "hrchain/hrm/hr_event.hpp"
#include "hrchain/ledger/block.hpp"
#include "hrchain/recruit/ranking.hpp"
#include "hrchain/registry/directory.hpp"

namespace hrchain::hrm {

enum class HrmErrc {
  BadSignature,
  UnknownParticipant,
  ConsensusStalled,
  NotCurrentEmployer,
  NotInRankedList,
  PartyMismatch,
  ParseError,
};

std::string_view to_string(HrmErrc code);

using HrmError = CodedError<HrmErrc>;

/// A company's decision to hire one applicant from its latest ranking.
struct HireDecision {
  ParticipantId company;
  ParticipantId applicant;
  std::uint64_t source_rank = 0;  // 1-based position in the ranked list

  friend bool operator==(const HireDecision&, const HireDecision&) = default;
};

/// Fold of committed ContractRecords and terminating Transfers: who employs
/// whom at the end of the folded blocks.
class EmploymentIndex {
 public:
  void apply(const ledger::Block& block);
  std::optional<ParticipantId> employer_of(const ParticipantId& subject) const;

 private:
  std::map<ParticipantId, ParticipantId> employer_;
};

EmploymentIndex build_employment_index(std::span<const ledger::Block> blocks);
std::optional<ParticipantId> current_employer(const ParticipantId& subject,
                                              std::span<const ledger::Block> blocks);

/// One past the highest nonce `author` has used in `blocks` (0 if none).
std::uint64_t next_nonce(const ParticipantId& author, std::span<const ledger::Block> blocks);

/// Preconditions of a hire: the contract binds the decision's parties,
/// both signatures verify, both parties are registered, and the applicant
/// holds `source_rank` in `ranking`. Throws HrmError.
void check_hire(const HireDecision& decision, const EmploymentContract& contract,
                const recruit::RankedList& ranking, const registry::Directory& directory);

/// Throws HrmError{BadSignature} or HrmError{NotCurrentEmployer} against
/// the employment state at the end of `blocks`.
void check_hr_event(const HrEventRecord& event, std::span<const ledger::Block> blocks);

ledger::Transaction make_contract_tx(const EmploymentContract& contract,
                                     const registry::KeyPair& employer_keys, std::uint64_t nonce);
ledger::Transaction make_hr_event_tx(const HrEventRecord& event,
                                     const registry::KeyPair& issuer_keys, std::uint64_t nonce);

/// Commits the contract as the only transaction of a new block through
/// `consensus`. Throws HrmError (ConsensusStalled when no miner can act).
ledger::Chain record_hire(const HireDecision& decision, const EmploymentContract& contract,
                          const recruit::RankedList& ranking,
                          const registry::KeyPair& employer_keys, ledger::Chain chain,
                          consensus::LocalConsensus& consensus, std::uint64_t timestamp);

struct Hire {
  HireDecision decision;
  EmploymentContract contract;
};

/// Processes successful applicants in order, one block per hire.
ledger::Chain record_hires(std::span<const Hire> hires, const recruit::RankedList& ranking,
                           const registry::KeyPair& employer_keys, ledger::Chain chain,
                           consensus::LocalConsensus& consensus, std::uint64_t timestamp);

/// Commits an HR event issued by the subject's current employer.
ledger::Chain record_hr_event(const HrEventRecord& event, const registry::KeyPair& issuer_keys,
                              ledger::Chain chain, consensus::LocalConsensus& consensus,
                              std::uint64_t timestamp);

}  // namespace hrchain::hrm
