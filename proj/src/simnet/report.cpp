#include "hrchain/simnet/report.hpp"

#include <algorithm>

#include "hrchain/simnet/scenario.hpp"

namespace hrchain::simnet {

std::uint64_t measure_latency(const SimReport& report, const ledger::Digest& tx_id) {
  auto it = std::find_if(report.txs.begin(), report.txs.end(),
                         [&](const TxTrace& t) { return t.tx_id == tx_id; });
  if (it == report.txs.end() || !it->commit_tick) {
    throw SimnetError(SimnetErrc::TxNotCommitted, tx_id.short_hex());
  }
  return *it->commit_tick - it->announce_tick;
}

namespace {

template <typename T>
void opt(std::ostream& out, const std::optional<T>& v) {
  if (v) out << *v;
}

}  // namespace

void write_report(std::ostream& out, const SimReport& r, const registry::NameBook& names) {
  out << "tx_id,kind,author,announce_tick,commit_tick,height,latency\n";
  for (const auto& t : r.txs) {
    out << t.tx_id.hex() << ',' << ledger::to_string(t.kind) << ',' << names.name_of(t.author) << ','
        << t.announce_tick << ',';
    opt(out, t.commit_tick);
    out << ',';
    opt(out, t.height);
    out << ',';
    if (t.commit_tick) out << *t.commit_tick - t.announce_tick;
    out << '\n';
  }
  out << "\nstall_start,stall_end\n";
  for (const auto& s : r.stalls) {
    out << s.start << ',';
    opt(out, s.end);
    out << '\n';
  }
  if (!r.failures.empty()) {
    out << "\nfailed_step,tick,error\n";
    for (const auto& f : r.failures) out << f.step << ',' << f.tick << ',' << f.error << '\n';
  }
  out << "\n[summary]\n"
      << "seed=" << r.seed << '\n'
      << "final_tick=" << r.final_tick << '\n'
      << "tick_limit_reached=" << (r.tick_limit_reached ? "true" : "false") << '\n'
      << "converged=" << (r.converged ? "true" : "false") << '\n'
      << "permanent_stall=" << (r.permanent_stall ? "true" : "false") << '\n'
      << "rejected_blocks=" << r.rejected_blocks << '\n'
      << "messages_sent=" << r.messages_sent << '\n'
      << "messages_dropped=" << r.messages_dropped << '\n'
      << "node,height,tip,chain_digest\n";
  for (const auto& n : r.nodes) {
    out << n.name << ',' << n.height << ',' << n.tip.hex() << ',' << n.chain_digest.hex() << '\n';
  }
}

}  // namespace hrchain::simnet
