#include "hrchain/cli/data_dir.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hrchain/ledger/chain_store.hpp"
#include "hrchain/simnet/bootstrap.hpp"

namespace hrchain::cli {

namespace fs = std::filesystem;

std::string_view to_string(CliErrc code) {
  switch (code) {
    case CliErrc::AlreadyInitialized: return "AlreadyInitialized";
    case CliErrc::NotInitialized: return "NotInitialized";
    case CliErrc::BadRoster: return "BadRoster";
    case CliErrc::NoSuchNode: return "NoSuchNode";
    case CliErrc::HeightOutOfRange: return "HeightOutOfRange";
    case CliErrc::ParseError: return "ParseError";
  }
  return "CliError";
}

namespace {

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(CliErrc::NotInitialized, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const fs::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::vector<std::string> split_names(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = std::min(text.find(',', start), text.size());
    if (end > start) out.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

}  // namespace

DataDir DataDir::init(const fs::path& root, std::string_view roster_text,
                      std::optional<consensus::DiversityRule> diversity,
                      std::vector<std::string> miners) {
  if (fs::exists(root / "roster.txt")) throw CliError(CliErrc::AlreadyInitialized, root.string());
  DataDir d;
  d.root_ = root;
  try {
    d.roster_ = registry::parse_roster(roster_text);
  } catch (const registry::RegistryError& e) {
    throw CliError(CliErrc::BadRoster, e.what());
  }
  if (miners.empty()) {
    for (const auto& e : d.roster_) {
      if (e.is_node()) miners.push_back(e.name);
    }
  }
  for (const auto& m : miners) {
    auto it = std::find_if(d.roster_.begin(), d.roster_.end(), [&](const auto& e) { return e.name == m; });
    if (it == d.roster_.end() || !it->is_node()) throw CliError(CliErrc::BadRoster, "miner '" + m + "' is not a node");
  }
  d.miners_ = std::move(miners);
  d.diversity_ = diversity.value_or(consensus::DiversityRule::of(Decimal::from_units(750'000)));
  d.names_ = registry::NameBook(d.roster_);

  auto genesis = simnet::make_deployment_genesis(d.roster_, d.miners_);
  ledger::Chain chain(genesis);
  fs::create_directories(root / "nodes");
  for (const auto& e : d.roster_) {
    if (!e.is_node()) continue;
    auto dir = root / "nodes" / e.name;
    fs::create_directories(dir);
    auto keys = e.keys();
    write_text(dir / "key.hex", to_hex(keys.seed()) + "\n");
    write_text(dir / "pub.hex", to_hex(keys.public_key()) + "\n");
    write_text(dir / "role.txt", std::string(registry::to_string(e.role)) + "\n");
    ledger::write_chain_file(dir / ledger::kChainFileName, chain);
  }
  std::string consensus = "diversity=" + d.diversity_.diversity.to_string() + "\nminers=";
  for (std::size_t i = 0; i < d.miners_.size(); ++i) consensus += (i ? "," : "") + d.miners_[i];
  write_text(root / "consensus.txt", consensus + "\n");
  // Written last: its presence marks an initialized directory.
  write_text(root / "roster.txt", registry::format_roster(d.roster_));
  return d;
}

DataDir DataDir::open(const fs::path& root) {
  if (!fs::exists(root / "roster.txt")) throw CliError(CliErrc::NotInitialized, root.string());
  DataDir d;
  d.root_ = root;
  d.roster_ = registry::parse_roster(slurp(root / "roster.txt"));
  d.diversity_ = consensus::DiversityRule::of(Decimal::from_units(750'000));
  std::istringstream in(slurp(root / "consensus.txt"));
  for (std::string line; std::getline(in, line);) {
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto key = line.substr(0, eq), value = line.substr(eq + 1);
    if (key == "diversity") d.diversity_ = consensus::DiversityRule::parse(value);
    if (key == "miners") d.miners_ = split_names(value);
  }
  d.names_ = registry::NameBook(d.roster_);
  return d;
}

std::vector<std::string> DataDir::node_names() const {
  std::vector<std::string> out;
  for (const auto& e : roster_) {
    if (e.is_node()) out.push_back(e.name);
  }
  return out;
}

const registry::RosterEntry& DataDir::entry(std::string_view name) const {
  auto it = std::find_if(roster_.begin(), roster_.end(), [&](const auto& e) { return e.name == name; });
  if (it == roster_.end()) throw CliError(CliErrc::NoSuchNode, std::string(name));
  return *it;
}

std::string DataDir::host_of(std::string_view identity) const {
  const auto& e = entry(identity);
  return e.host.value_or(e.name);
}

fs::path DataDir::node_dir(std::string_view node) const {
  const auto& e = entry(node);
  if (!e.is_node()) throw CliError(CliErrc::NoSuchNode, std::string(node) + " is hosted by " + *e.host);
  return root_ / "nodes" / e.name;
}

ledger::Chain DataDir::read_chain(std::string_view node) const {
  return ledger::read_chain_file(node_dir(node) / ledger::kChainFileName);
}

void DataDir::store_chain(std::string_view node, const ledger::Chain& chain) const {
  auto path = node_dir(node) / ledger::kChainFileName;
  auto stored = ledger::read_chain_file(path);
  bool extends = stored.size() <= chain.size() &&
                 std::equal(stored.blocks().begin(), stored.blocks().end(), chain.blocks().begin());
  if (!extends) {
    ledger::write_chain_file(path, chain);
    return;
  }
  for (std::size_t i = stored.size(); i < chain.size(); ++i) ledger::append_block_file(path, chain.at(i));
}

}  // namespace hrchain::cli
