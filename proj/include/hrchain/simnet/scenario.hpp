#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hrchain/common/decimal.hpp"
#include "hrchain/common/error.hpp"
#include "hrchain/common/record.hpp"
#include "hrchain/consensus/diversity.hpp"
#include "hrchain/hrm/hr_event.hpp"
#include "hrchain/ledger/block.hpp"
#include "hrchain/recruit/claim.hpp"
#include "hrchain/recruit/requirement.hpp"
#include "hrchain/registry/permission.hpp"
#include "hrchain/registry/roster.hpp"

namespace hrchain::simnet {

enum class SimnetErrc {
  MalformedScenario,
  UnknownMiner,
  TxNotCommitted,
};

std::string_view to_string(SimnetErrc code);

using SimnetError = CodedError<SimnetErrc>;

// Script actions. Participants are referred to by roster name.

/// Fact placed in an authority's local store.
struct RecordAction {
  std::string authority;
  std::string applicant;
  recruit::ClaimKind kind = recruit::ClaimKind::Education;
  Record statement;
};

/// Claim added to an applicant's profile. An empty issuer means none.
struct ClaimAction {
  std::string applicant;
  recruit::ClaimKind kind = recruit::ClaimKind::Education;
  std::string issuer;
  Record statement;
};

/// Applicant sends its current profile to a company.
struct ApplyAction {
  std::string applicant;
  std::string company;
};

struct RequireAction {
  std::string company;
  recruit::RequirementItem item;
};

/// Company verifies every received profile and ranks them.
struct RankAction {
  std::string company;
};

/// Company offers a contract to an applicant from its latest ranking.
struct HireAction {
  std::string company;
  std::string applicant;
  std::array<Record, 5> sections;  // kContractSections order
};

struct EventAction {
  std::string issuer;
  std::string subject;
  hrm::HrEventKind kind = hrm::HrEventKind::Salary;
  Record details;
};

struct GrantAction {
  std::string grantor;
  std::string subject;
  registry::Rights rights;
};

using Action = std::variant<RecordAction, ClaimAction, ApplyAction, RequireAction, RankAction,
                            HireAction, EventAction, GrantAction>;

struct ScriptStep {
  std::uint64_t tick = 0;
  Action action;
};

/// Miner inactive on [from, to); no `to` means for the rest of the run.
struct InactivityWindow {
  std::string miner;
  std::uint64_t from = 0;
  std::optional<std::uint64_t> to;
};

struct Scenario {
  std::uint64_t seed = 0;
  std::vector<registry::RosterEntry> roster;
  /// Miner names in registration order; empty means every node entry.
  std::vector<std::string> miners;
  consensus::DiversityRule diversity = consensus::DiversityRule::of(Decimal::from_units(750'000));
  std::vector<InactivityWindow> inactivity;
  bool batch_contracts = false;
  std::size_t max_block_txs = 16;

  std::uint64_t latency = 0;
  std::uint64_t tick_limit = 100'000;
  Decimal loss;              // per-message drop probability
  std::uint64_t reorder = 0;  // extra random delay bound, in ticks

  std::vector<ScriptStep> script;

  /// Chain every node starts from; a fresh genesis when absent. Script and
  /// inactivity ticks are relative to its tip timestamp.
  std::optional<ledger::Chain> initial_chain;

  std::vector<std::string> miner_names() const;
  const registry::RosterEntry* find(std::string_view name) const;
};

/// Copy of `scenario` with `miner` inactive on [from, to).
/// Throws SimnetError{UnknownMiner}.
Scenario inject_inactivity(Scenario scenario, std::string_view miner, std::uint64_t from,
                           std::optional<std::uint64_t> to);

/// Throws SimnetError{MalformedScenario} describing the first problem:
/// empty roster, no miners, unknown names in miners, inactivity or script.
void check_scenario(const Scenario& scenario);

}  // namespace hrchain::simnet
