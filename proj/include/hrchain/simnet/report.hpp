#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hrchain/ledger/digest.hpp"
#include "hrchain/ledger/transaction.hpp"
#include "hrchain/recruit/ranking.hpp"
#include "hrchain/registry/roster.hpp"

namespace hrchain::simnet {

struct TxTrace {
  ledger::Digest tx_id;
  ledger::TxKind kind = ledger::TxKind::ClaimAttestation;
  registry::ParticipantId author;
  std::uint64_t announce_tick = 0;
  // Position on the reference chain at the end of the run.
  std::optional<std::uint64_t> commit_tick;
  std::optional<std::uint64_t> height;

  friend bool operator==(const TxTrace&, const TxTrace&) = default;
};

/// Ticks during which work was pending but no proposer/validator pair
/// could act. `end` is unset when the run finished stalled.
struct StallInterval {
  std::uint64_t start = 0;
  std::optional<std::uint64_t> end;

  friend bool operator==(const StallInterval&, const StallInterval&) = default;
};

struct RankingResult {
  std::uint64_t tick = 0;
  registry::ParticipantId company;
  recruit::RankedList list;

  friend bool operator==(const RankingResult&, const RankingResult&) = default;
};

struct ActionFailure {
  std::uint64_t tick = 0;
  std::size_t step = 0;  // index into the script
  std::string error;

  friend bool operator==(const ActionFailure&, const ActionFailure&) = default;
};

struct NodeSummary {
  std::string name;
  std::uint64_t height = 0;
  ledger::Digest tip;
  ledger::Digest chain_digest;  // double hash of the node's chain.dat bytes

  friend bool operator==(const NodeSummary&, const NodeSummary&) = default;
};

struct SimReport {
  std::uint64_t seed = 0;
  std::uint64_t final_tick = 0;
  bool tick_limit_reached = false;
  bool converged = false;
  bool permanent_stall = false;
  std::uint64_t rejected_blocks = 0;
  std::uint64_t messages_sent = 0;
  std::uint64_t messages_dropped = 0;
  std::vector<TxTrace> txs;  // announce order
  std::vector<StallInterval> stalls;
  std::vector<RankingResult> rankings;
  std::vector<ActionFailure> failures;
  std::vector<NodeSummary> nodes;  // roster order

  friend bool operator==(const SimReport&, const SimReport&) = default;
};

/// commit_tick - announce_tick. Throws SimnetError{TxNotCommitted}.
std::uint64_t measure_latency(const SimReport& report, const ledger::Digest& tx_id);

/// Transaction rows, stall rows, then a `[summary]` block with one line per
/// node carrying its final chain digest.
void write_report(std::ostream& out, const SimReport& report, const registry::NameBook& names);

}  // namespace hrchain::simnet
