#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hrchain/common/error.hpp"
#include "hrchain/consensus/diversity.hpp"
#include "hrchain/ledger/block.hpp"
#include "hrchain/registry/roster.hpp"

namespace hrchain::cli {

enum class CliErrc {
  AlreadyInitialized,
  NotInitialized,
  BadRoster,
  NoSuchNode,
  HeightOutOfRange,
  ParseError,
};

std::string_view to_string(CliErrc code);

using CliError = CodedError<CliErrc>;

/// On-disk deployment:
///
///   roster.txt                 the roster, every seed spelled out
///   consensus.txt              diversity=..., miners=a,b,c
///   nodes/<name>/key.hex       node identity seed
///   nodes/<name>/pub.hex       its public key
///   nodes/<name>/role.txt
///   nodes/<name>/chain.dat     the node's chain
class DataDir {
 public:
  /// Creates the layout with a genesis chain in every node directory.
  /// Miners default to every node entry. Throws CliError{AlreadyInitialized}
  /// or CliError{BadRoster}.
  static DataDir init(const std::filesystem::path& root, std::string_view roster_text,
                      std::optional<consensus::DiversityRule> diversity,
                      std::vector<std::string> miners);
  /// Throws CliError{NotInitialized}.
  static DataDir open(const std::filesystem::path& root);

  const std::filesystem::path& root() const { return root_; }
  const std::vector<registry::RosterEntry>& roster() const { return roster_; }
  const std::vector<std::string>& miners() const { return miners_; }
  const consensus::DiversityRule& diversity() const { return diversity_; }
  const registry::NameBook& names() const { return names_; }

  /// Node entries in roster order.
  std::vector<std::string> node_names() const;
  /// Name of the node running `identity` (itself, or its host).
  std::string host_of(std::string_view identity) const;
  const registry::RosterEntry& entry(std::string_view name) const;

  /// Throws CliError{NoSuchNode}.
  std::filesystem::path node_dir(std::string_view node) const;
  ledger::Chain read_chain(std::string_view node) const;
  /// Rewrites chain.dat, appending in place when `chain` extends the
  /// stored one so the existing prefix is never touched.
  void store_chain(std::string_view node, const ledger::Chain& chain) const;

 private:
  std::filesystem::path root_;
  std::vector<registry::RosterEntry> roster_;
  std::vector<std::string> miners_;
  consensus::DiversityRule diversity_;
  registry::NameBook names_;
};

}  // namespace hrchain::cli
