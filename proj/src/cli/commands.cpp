#include "hrchain/cli/commands.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "hrchain/cli/data_dir.hpp"
#include "hrchain/consensus/local_consensus.hpp"
#include "hrchain/hrm/hire.hpp"
#include "hrchain/hrm/history.hpp"
#include "hrchain/hrm/io.hpp"
#include "hrchain/ledger/chain_store.hpp"
#include "hrchain/simnet/bootstrap.hpp"
#include "hrchain/simnet/scenario_parser.hpp"
#include "hrchain/simnet/simulator.hpp"

namespace hrchain::cli {

namespace fs = std::filesystem;

namespace {

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(CliErrc::ParseError, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const fs::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

registry::ParticipantId id_of(const DataDir& d, std::string_view name) {
  auto id = d.names().id_of(name);
  if (!id) throw CliError(CliErrc::NoSuchNode, std::string(name));
  return *id;
}

consensus::LocalConsensus local_consensus(const DataDir& d) {
  return consensus::LocalConsensus(simnet::miner_keys(d.roster(), d.miners()), d.diversity());
}

void store_everywhere(const DataDir& d, const ledger::Chain& chain) {
  for (const auto& node : d.node_names()) d.store_chain(node, chain);
}

fs::path ranked_list_path(const DataDir& d, std::string_view company) {
  return d.node_dir(d.host_of(company)) / ("ranked_list_" + std::string(company) + ".csv");
}

}  // namespace

int exit_code_for(const std::exception& e) {
  if (const auto* c = dynamic_cast<const consensus::ConsensusError*>(&e)) {
    if (c->code() == consensus::ConsensusErrc::ConsensusStalled) return kExitStall;
  }
  if (const auto* h = dynamic_cast<const hrm::HrmError*>(&e)) {
    if (h->code() == hrm::HrmErrc::ConsensusStalled) return kExitStall;
  }
  return kExitError;
}

int cmd_init(const InitOptions& opts, std::ostream& out) {
  std::optional<consensus::DiversityRule> diversity;
  if (opts.diversity) diversity = consensus::DiversityRule::parse(*opts.diversity);
  auto roster = read_text(opts.roster);
  auto d = DataDir::init(opts.data_dir, roster, diversity, opts.miners);
  auto genesis = d.read_chain(d.node_names().front()).genesis();
  out << "initialized " << d.node_names().size() << " nodes in " << d.root().string() << '\n'
      << "genesis " << ledger::block_id(genesis).hex() << '\n';
  return kExitOk;
}

int cmd_run(const RunOptions& opts, std::ostream& out) {
  auto scenario = simnet::parse_scenario(read_text(opts.scenario));
  if (opts.seed) scenario.seed = *opts.seed;
  simnet::Simulator sim(scenario);
  auto report = sim.run();

  fs::create_directories(opts.data_dir);
  std::ostringstream csv;
  simnet::write_report(csv, report, sim.names());
  write_text(opts.data_dir / "report.csv", csv.str());
  for (const auto& node : sim.nodes()) {
    auto dir = opts.data_dir / "nodes" / node.name;
    fs::create_directories(dir);
    ledger::write_chain_file(dir / ledger::kChainFileName, node.chain);
  }

  if (opts.format == OutputFormat::Csv) {
    out << csv.str();
  } else {
    out << "final tick      " << report.final_tick << '\n'
        << "transactions    " << report.txs.size() << '\n'
        << "converged       " << (report.converged ? "yes" : "no") << '\n'
        << "rejected blocks " << report.rejected_blocks << '\n'
        << "stalls          " << report.stalls.size() << '\n'
        << "permanent stall " << (report.permanent_stall ? "yes" : "no") << '\n';
    for (const auto& f : report.failures) {
      out << "step " << f.step << " failed at tick " << f.tick << ": " << f.error << '\n';
    }
    for (const auto& n : report.nodes) {
      out << std::left << std::setw(16) << n.name << "height " << std::setw(6) << n.height << "digest "
          << n.chain_digest.hex() << '\n';
    }
  }
  return report.permanent_stall ? kExitStall : kExitOk;
}

int cmd_rank(const RankOptions& opts, std::ostream& out) {
  auto d = DataDir::open(opts.data_dir);
  const auto& names = d.names();
  auto company = id_of(d, opts.company);
  auto profiles = recruit::parse_applicants(read_text(opts.applicants), names);
  auto spec = recruit::parse_requirements(read_text(opts.requirements), company);
  std::vector<recruit::AuthorityRecordLine> records;
  if (opts.records) records = recruit::parse_authority_records(read_text(*opts.records), names);

  // One-shot deployment run: authorities load their records, applicants
  // submit profiles, the company ranks and the verdicts get notarized.
  simnet::Scenario s;
  s.seed = opts.seed.value_or(0);
  s.roster = d.roster();
  s.miners = d.miners();
  s.diversity = d.diversity();
  s.initial_chain = d.read_chain(d.host_of(opts.company));
  for (const auto& r : records) {
    s.script.push_back({0, simnet::RecordAction{names.name_of(r.authority), names.name_of(r.applicant), r.kind,
                                                r.statement}});
  }
  for (const auto& p : profiles) {
    for (const auto& c : p.claims) {
      s.script.push_back({0, simnet::ClaimAction{names.name_of(p.applicant), c.kind,
                                                 c.issuer.is_zero() ? "" : names.name_of(c.issuer),
                                                 c.statement}});
    }
  }
  for (const auto& item : spec.items) {
    s.script.push_back({0, simnet::Action{simnet::RequireAction{opts.company, item}}});
  }
  for (const auto& p : profiles) {
    s.script.push_back({1, simnet::ApplyAction{names.name_of(p.applicant), opts.company}});
  }
  s.script.push_back({3, simnet::RankAction{opts.company}});

  simnet::Simulator sim(s);
  auto report = sim.run();
  for (const auto& f : report.failures) throw std::runtime_error(f.error);
  const recruit::RankedList* list = nullptr;
  for (const auto& r : report.rankings) {
    if (r.company == company) list = &r.list;
  }
  if (list == nullptr) throw std::runtime_error("ranking did not complete");

  for (const auto& node : sim.nodes()) d.store_chain(node.name, node.chain);
  std::ostringstream csv;
  recruit::write_ranked_list(csv, *list, names, OutputFormat::Csv);
  write_text(ranked_list_path(d, opts.company), csv.str());
  if (opts.format == OutputFormat::Csv) {
    out << csv.str();
  } else {
    recruit::write_ranked_list(out, *list, names, OutputFormat::Text);
  }
  return report.permanent_stall ? kExitStall : kExitOk;
}

int cmd_hire(const HireOptions& opts, std::ostream& out) {
  auto d = DataDir::open(opts.data_dir);
  const auto& names = d.names();
  auto contract = hrm::parse_contract(read_text(opts.contract), names);
  auto company = names.name_of(contract.employer);
  auto employee = names.name_of(contract.employee);

  auto list_path = ranked_list_path(d, company);
  if (!fs::exists(list_path)) throw hrm::HrmError(hrm::HrmErrc::NotInRankedList, company + " has not ranked yet");
  auto ranking = recruit::parse_ranked_list(read_text(list_path), names);
  auto rank = ranking.rank_of(contract.employee);
  if (!rank) throw hrm::HrmError(hrm::HrmErrc::NotInRankedList, employee);

  auto employer_keys = d.entry(company).keys();
  contract.sign_as_employer(employer_keys);
  contract.sign_as_employee(d.entry(employee).keys());

  auto chain = d.read_chain(d.host_of(company));
  auto consensus = local_consensus(d);
  const auto timestamp = chain.tip().header.timestamp + 1;
  chain = hrm::record_hire({contract.employer, contract.employee, *rank}, contract, ranking, employer_keys,
                           std::move(chain), consensus, timestamp);
  store_everywhere(d, chain);
  out << "contract " << ledger::tx_id(chain.tip().transactions.front()).hex() << " committed at height "
      << chain.height() << '\n';
  return kExitOk;
}

int cmd_event(const EventOptions& opts, std::ostream& out) {
  auto d = DataDir::open(opts.data_dir);
  auto kind = hrm::parse_hr_event_kind(opts.kind);
  if (!kind) throw CliError(CliErrc::ParseError, "unknown HR event kind '" + opts.kind + "'");
  auto details = Record::parse(opts.details);
  if (!details) throw CliError(CliErrc::ParseError, "malformed details '" + opts.details + "'");

  auto chain = d.read_chain(d.host_of(opts.issuer));
  hrm::HrEventRecord event;
  event.subject = id_of(d, opts.subject);
  event.kind = *kind;
  event.details = std::move(*details);
  event.effective_tick = chain.tip().header.timestamp + 1;
  event.issuer = id_of(d, opts.issuer);
  auto keys = d.entry(opts.issuer).keys();
  event.sign(keys);

  auto consensus = local_consensus(d);
  chain = hrm::record_hr_event(event, keys, std::move(chain), consensus, event.effective_tick);
  store_everywhere(d, chain);
  out << to_string(event.kind) << " event committed at height " << chain.height() << '\n';
  return kExitOk;
}

int cmd_inspect(const InspectOptions& opts, std::ostream& out) {
  auto d = DataDir::open(opts.data_dir);
  const auto& names = d.names();
  auto chain = d.read_chain(opts.node);
  if (!opts.height) {
    out << std::left << std::setw(8) << "height" << std::setw(18) << "block" << std::setw(18) << "prev"
        << std::setw(14) << "miner" << "transactions\n";
    for (const auto& b : chain.blocks()) {
      out << std::left << std::setw(8) << b.header.height << std::setw(18) << ledger::block_id(b).short_hex()
          << std::setw(18) << b.header.prev_hash.short_hex() << std::setw(14) << names.name_of(b.header.miner);
      for (std::size_t i = 0; i < b.transactions.size(); ++i) {
        out << (i ? " " : "") << ledger::to_string(b.transactions[i].kind);
      }
      out << '\n';
    }
    return kExitOk;
  }
  if (*opts.height > chain.height()) {
    throw CliError(CliErrc::HeightOutOfRange,
                   std::to_string(*opts.height) + " > tip " + std::to_string(chain.height()));
  }
  const auto& b = chain.at(*opts.height);
  out << "height       " << b.header.height << '\n'
      << "block_id     " << ledger::block_id(b).hex() << '\n'
      << "version      " << b.header.version << '\n'
      << "prev_hash    " << b.header.prev_hash.hex() << '\n'
      << "merkle_root  " << b.header.merkle_root.hex() << '\n'
      << "timestamp    " << b.header.timestamp << '\n'
      << "miner        " << names.name_of(b.header.miner) << '\n'
      << "tx_count     " << b.tx_count << '\n';
  for (std::size_t i = 0; i < b.transactions.size(); ++i) {
    const auto& tx = b.transactions[i];
    out << "tx " << i << "  " << ledger::to_string(tx.kind) << "  author " << names.name_of(tx.author)
        << "  nonce " << tx.nonce << "  payload " << tx.payload.size() << " bytes\n"
        << "      id " << ledger::tx_id(tx).hex() << '\n';
  }
  return kExitOk;
}

int cmd_history(const HistoryOptions& opts, std::ostream& out) {
  auto d = DataDir::open(opts.data_dir);
  auto chain = d.read_chain(opts.node);
  auto subject = id_of(d, opts.subject);
  auto entries = hrm::query_history(subject, chain.blocks());
  hrm::write_history_csv(out, subject, entries, d.names());
  return kExitOk;
}

}  // namespace hrchain::cli
