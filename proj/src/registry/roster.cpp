#include "hrchain/registry/roster.hpp"

#include <algorithm>
#include <set>

#include "hrchain/ledger/hash.hpp"

namespace hrchain::registry {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto end = s.find(sep, start);
    if (end == std::string_view::npos) {
      out.push_back(trim(s.substr(start)));
      return out;
    }
    out.push_back(trim(s.substr(start, end - start)));
    start = end + 1;
  }
}

[[noreturn]] void bad(std::size_t line, const std::string& why) {
  throw RegistryError(RegistryErrc::BadRoster, "line " + std::to_string(line) + ": " + why);
}

}  // namespace

Seed derived_seed(std::string_view name) {
  std::string label = "hrchain/roster/";
  label += name;
  return ledger::double_hash(as_bytes(label)).bytes();
}

std::vector<RosterEntry> parse_roster(std::string_view text) {
  std::vector<RosterEntry> entries;
  std::set<std::string, std::less<>> names;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    auto cols = split(line, ',');
    if (cols.size() < 3 || cols.size() > 4) bad(line_no, "expected role,name,key_hex[,host]");
    auto role = parse_role(cols[0]);
    if (!role) bad(line_no, "unknown role '" + std::string(cols[0]) + "'");
    if (cols[1].empty()) bad(line_no, "empty name");
    for (char c : cols[1]) {
      if (c == ' ' || c == ';' || c == '=' || c == ':') bad(line_no, "invalid character in name");
    }
    RosterEntry e;
    e.role = *role;
    e.name = std::string(cols[1]);
    if (cols[2].empty()) {
      e.seed = derived_seed(e.name);
    } else {
      auto raw = from_hex(cols[2]);
      if (!raw || raw->size() != kSeedSize) bad(line_no, "key_hex must be 64 hex digits");
      std::copy(raw->begin(), raw->end(), e.seed.begin());
    }
    if (cols.size() == 4 && !cols[3].empty()) e.host = std::string(cols[3]);
    if (!names.insert(e.name).second) bad(line_no, "duplicate name '" + e.name + "'");
    entries.push_back(std::move(e));
  }
  if (entries.empty()) throw RegistryError(RegistryErrc::BadRoster, "roster has no entries");
  for (const auto& e : entries) {
    if (!e.host) continue;
    auto it = std::find_if(entries.begin(), entries.end(),
                           [&](const RosterEntry& h) { return h.name == *e.host; });
    if (it == entries.end() || it->host) {
      throw RegistryError(RegistryErrc::BadRoster, "host '" + *e.host + "' of '" + e.name +
                                                       "' is not a node entry");
    }
  }
  return entries;
}

std::string format_roster(const std::vector<RosterEntry>& entries) {
  std::string out;
  for (const auto& e : entries) {
    out += to_string(e.role);
    out += ',';
    out += e.name;
    out += ',';
    out += to_hex(e.seed);
    if (e.host) {
      out += ',';
      out += *e.host;
    }
    out += '\n';
  }
  return out;
}

NameBook::NameBook(const std::vector<RosterEntry>& roster) {
  for (const auto& e : roster) add(e.name, e.keys().id());
}

void NameBook::add(const std::string& name, const ParticipantId& id) {
  by_name_[name] = id;
  by_id_[id] = name;
}

std::optional<ParticipantId> NameBook::id_of(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::string NameBook::name_of(const ParticipantId& id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? id.short_hex() : it->second;
}

}  // namespace hrchain::registry
