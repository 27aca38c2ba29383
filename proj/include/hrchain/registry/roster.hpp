#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hrchain/registry/keys.hpp"
#include "hrchain/registry/permission.hpp"

namespace hrchain::registry {

/// One line of a roster file: `role,name,key_hex[,host]`.
///
/// key_hex is the participant's 32-byte secret seed in hex; an empty field
/// derives the seed from the name. `host` names another roster entry whose
/// node holds this identity's keys (several applicants sharing one
/// machine, for instance); entries without a host run their own node.
struct RosterEntry {
  Role role = Role::Applicant;
  std::string name;
  Seed seed{};
  std::optional<std::string> host;

  KeyPair keys() const { return KeyPair::from_seed(seed); }
  bool is_node() const { return !host.has_value(); }

  friend bool operator==(const RosterEntry&, const RosterEntry&) = default;
};

/// Seed used when a roster line leaves key_hex empty.
Seed derived_seed(std::string_view name);

/// Blank lines and `#` comments are ignored. Throws RegistryError{BadRoster}
/// with the offending line number, or for a roster with no entries.
std::vector<RosterEntry> parse_roster(std::string_view text);
std::string format_roster(const std::vector<RosterEntry>& entries);

/// Bidirectional name <-> id map for file formats and reports.
class NameBook {
 public:
  NameBook() = default;
  explicit NameBook(const std::vector<RosterEntry>& roster);

  void add(const std::string& name, const ParticipantId& id);
  std::optional<ParticipantId> id_of(std::string_view name) const;
  /// Registered name, or the short hex form of the id.
  std::string name_of(const ParticipantId& id) const;

 private:
  std::map<std::string, ParticipantId, std::less<>> by_name_;
  std::map<ParticipantId, std::string> by_id_;
};

}  // namespace hrchain::registry
