#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "hrchain/simnet/node.hpp"
#include "hrchain/simnet/report.hpp"
#include "hrchain/simnet/scenario.hpp"

namespace hrchain::simnet {

/// Deterministic discrete-event run of a scenario.
///
/// Events are processed in (tick, insertion sequence) order on one thread.
/// Every message hop takes 1 + latency ticks (plus a seeded random delay
/// when reordering is on), so with zero latency a transaction announced at
/// tick a reaches the proposer at a + 1, the validator at a + 2 and every
/// node's chain at a + 3.
class Simulator {
 public:
  /// Throws SimnetError{MalformedScenario}.
  explicit Simulator(Scenario scenario);
  ~Simulator();
  Simulator(const Simulator&) = delete;
  Simulator& operator=(const Simulator&) = delete;

  /// Runs to quiescence or the tick limit. Call once.
  SimReport run();

  const std::vector<SimNode>& nodes() const;
  /// Throws std::out_of_range for an unknown node name.
  const SimNode& node(std::string_view name) const;
  const registry::NameBook& names() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

SimReport run(const Scenario& scenario);

}  // namespace hrchain::simnet
