#include "hrchain/consensus/diversity.hpp"

#include <algorithm>
#include <stdexcept>

namespace hrchain::consensus {

DiversityRule DiversityRule::of(Decimal d) {
  if (d > Decimal::from_integer(1)) throw std::invalid_argument("diversity must lie in [0, 1]");
  return DiversityRule{d};
}

DiversityRule DiversityRule::parse(std::string_view text) {
  auto d = Decimal::parse(text);
  if (!d) throw std::invalid_argument("diversity is not a decimal: " + std::string(text));
  return of(*d);
}

std::size_t DiversityRule::liveness_threshold(std::size_t miner_count) const {
  return std::max<std::size_t>(static_cast<std::size_t>(window(miner_count)), 2);
}

std::vector<ParticipantId> eligible_miners(std::span<const ledger::Block> chain,
                                           const MinerSet& miners, const DiversityRule& rule) {
  const std::uint64_t window = rule.window(miners.size());
  const std::uint64_t next_height = chain.empty() ? 0 : chain.back().header.height + 1;

  // Heights [max(1, h - window + 1), h - 1] block their miners.
  std::vector<ParticipantId> recent;
  if (window > 1 && next_height > 1) {
    std::uint64_t lowest = next_height >= window ? next_height - window + 1 : 1;
    lowest = std::max<std::uint64_t>(lowest, 1);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      auto h = it->header.height;
      if (h < lowest || h == 0) break;
      if (h < next_height) recent.push_back(it->header.miner);
    }
  }

  std::vector<ParticipantId> out;
  for (const auto& m : miners.members()) {
    if (!m.active) continue;
    if (std::find(recent.begin(), recent.end(), m.id) != recent.end()) continue;
    out.push_back(m.id);
  }
  return out;
}

std::optional<ParticipantId> designated_proposer(std::uint64_t height, const MinerSet& miners,
                                                 std::span<const ParticipantId> eligible) {
  if (eligible.empty()) return std::nullopt;
  const std::size_t m = miners.size();
  const std::size_t start = static_cast<std::size_t>((height == 0 ? 0 : height - 1) % m);
  for (std::size_t step = 0; step < m; ++step) {
    const auto& candidate = miners.at((start + step) % m).id;
    if (std::find(eligible.begin(), eligible.end(), candidate) != eligible.end()) return candidate;
  }
  return std::nullopt;
}

std::optional<ParticipantId> designated_validator(const ParticipantId& proposer,
                                                  const MinerSet& miners) {
  auto idx = miners.index_of(proposer);
  if (!idx) return std::nullopt;
  const std::size_t m = miners.size();
  for (std::size_t step = 1; step < m; ++step) {
    const auto& candidate = miners.at((*idx + step) % m);
    if (candidate.active) return candidate.id;
  }
  return std::nullopt;
}

}  // namespace hrchain::consensus
