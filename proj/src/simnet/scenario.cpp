#include "hrchain/simnet/scenario.hpp"

#include <algorithm>
#include <set>

namespace hrchain::simnet {

std::string_view to_string(SimnetErrc code) {
  switch (code) {
    case SimnetErrc::MalformedScenario: return "MalformedScenario";
    case SimnetErrc::UnknownMiner: return "UnknownMiner";
    case SimnetErrc::TxNotCommitted: return "TxNotCommitted";
  }
  return "SimnetError";
}

std::vector<std::string> Scenario::miner_names() const {
  if (!miners.empty()) return miners;
  std::vector<std::string> out;
  for (const auto& e : roster) {
    if (e.is_node()) out.push_back(e.name);
  }
  return out;
}

const registry::RosterEntry* Scenario::find(std::string_view name) const {
  auto it = std::find_if(roster.begin(), roster.end(), [&](const auto& e) { return e.name == name; });
  return it == roster.end() ? nullptr : &*it;
}

Scenario inject_inactivity(Scenario scenario, std::string_view miner, std::uint64_t from,
                           std::optional<std::uint64_t> to) {
  auto names = scenario.miner_names();
  if (std::find(names.begin(), names.end(), miner) == names.end()) {
    throw SimnetError(SimnetErrc::UnknownMiner, std::string(miner));
  }
  scenario.inactivity.push_back({std::string(miner), from, to});
  return scenario;
}

namespace {

[[noreturn]] void malformed(const std::string& why) { throw SimnetError(SimnetErrc::MalformedScenario, why); }

}  // namespace

void check_scenario(const Scenario& s) {
  if (s.roster.empty()) malformed("empty roster");
  auto miners = s.miner_names();
  if (miners.empty()) malformed("no miners");
  std::set<std::string> seen;
  for (const auto& m : miners) {
    const auto* e = s.find(m);
    if (e == nullptr) malformed("unknown miner '" + m + "'");
    if (!e->is_node()) malformed("miner '" + m + "' is hosted on another node");
    if (!seen.insert(m).second) malformed("duplicate miner '" + m + "'");
  }
  for (const auto& w : s.inactivity) {
    if (!seen.contains(w.miner)) malformed("inactivity for non-miner '" + w.miner + "'");
    if (w.to && *w.to < w.from) malformed("inactivity window ends before it starts");
  }
  if (s.max_block_txs == 0) malformed("max_block_txs must be positive");
  if (s.loss > Decimal::from_integer(1)) malformed("loss must be within [0, 1]");

  auto known = [&](const std::string& name) {
    if (s.find(name) == nullptr) malformed("unknown participant '" + name + "' in script");
  };
  for (const auto& step : s.script) {
    std::visit(
        [&](const auto& a) {
          using T = std::decay_t<decltype(a)>;
          if constexpr (std::is_same_v<T, RecordAction>) {
            known(a.authority), known(a.applicant);
          } else if constexpr (std::is_same_v<T, ClaimAction>) {
            known(a.applicant);
            if (!a.issuer.empty()) known(a.issuer);
          } else if constexpr (std::is_same_v<T, ApplyAction>) {
            known(a.applicant), known(a.company);
          } else if constexpr (std::is_same_v<T, RequireAction> || std::is_same_v<T, RankAction>) {
            known(a.company);
          } else if constexpr (std::is_same_v<T, HireAction>) {
            known(a.company), known(a.applicant);
          } else if constexpr (std::is_same_v<T, EventAction>) {
            known(a.issuer), known(a.subject);
          } else {
            known(a.grantor), known(a.subject);
          }
        },
        step.action);
  }
}

}  // namespace hrchain::simnet
