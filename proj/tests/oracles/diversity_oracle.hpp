#pragma once

// Eligibility by the plain reading of the diversity rule: with window
// w = ceil(d * M), a miner may not produce the next block if it produced
// any of the previous w - 1 non-genesis blocks. Miners are indices in
// registration order; `history` lists the miners of blocks 1..h.

#include <cstdint>
#include <vector>

namespace oracle {

inline std::uint64_t window(std::uint64_t d_millionths, std::uint64_t miners) {
  return (d_millionths * miners + 999'999) / 1'000'000;
}

inline std::vector<int> eligible(const std::vector<int>& history, const std::vector<bool>& active,
                                 std::uint64_t w) {
  std::vector<int> out;
  for (int m = 0; m < static_cast<int>(active.size()); ++m) {
    if (!active[static_cast<std::size_t>(m)]) continue;
    bool recent = false;
    for (std::uint64_t back = 1; back < w && back <= history.size(); ++back) {
      recent |= history[history.size() - back] == m;
    }
    if (!recent) out.push_back(m);
  }
  return out;
}

}  // namespace oracle
