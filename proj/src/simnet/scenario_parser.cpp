#include "hrchain/simnet/scenario_parser.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "hrchain/hrm/contract.hpp"

namespace hrchain::simnet {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::size_t line, const std::string& why) {
  throw SimnetError(SimnetErrc::MalformedScenario, "line " + std::to_string(line) + ": " + why);
}

std::uint64_t integer(std::string_view text, std::size_t line) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size() || text.empty()) {
    fail(line, "expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return v;
}

bool boolean(std::string_view text, std::size_t line) {
  if (text == "true") return true;
  if (text == "false") return false;
  fail(line, "expected true or false");
}

Record fields(std::string_view text, std::size_t line) {
  if (text == "-") return {};
  auto r = Record::parse(text);
  if (!r) fail(line, "malformed fields '" + std::string(text) + "'");
  return *r;
}

recruit::ClaimKind claim_kind(std::string_view text, std::size_t line) {
  auto k = recruit::parse_claim_kind(text);
  if (!k) fail(line, "unknown claim kind '" + std::string(text) + "'");
  return *k;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto end = text.find(sep, start);
    out.emplace_back(trim(text.substr(start, end == std::string_view::npos ? end : end - start)));
    if (end == std::string_view::npos) return out;
    start = end + 1;
  }
}

void consensus_key(Scenario& s, std::string_view key, std::string_view value, std::size_t line) {
  if (key == "diversity") {
    try {
      s.diversity = consensus::DiversityRule::parse(value);
    } catch (const std::invalid_argument& e) {
      fail(line, e.what());
    }
  } else if (key == "miners") {
    s.miners = split(value, ',');
  } else if (key == "inactive") {
    auto at = value.find('@');
    auto dash = value.find('-', at == std::string_view::npos ? 0 : at);
    if (at == std::string_view::npos || dash == std::string_view::npos) fail(line, "expected name@from-to");
    InactivityWindow w;
    w.miner = std::string(trim(value.substr(0, at)));
    w.from = integer(value.substr(at + 1, dash - at - 1), line);
    auto to = value.substr(dash + 1);
    if (to != "inf") w.to = integer(to, line);
    s.inactivity.push_back(std::move(w));
  } else if (key == "batch_contracts") {
    s.batch_contracts = boolean(value, line);
  } else if (key == "max_block_txs") {
    s.max_block_txs = integer(value, line);
  } else {
    fail(line, "unknown consensus key '" + std::string(key) + "'");
  }
}

void network_key(Scenario& s, std::string_view key, std::string_view value, std::size_t line) {
  if (key == "seed") {
    s.seed = integer(value, line);
  } else if (key == "latency") {
    s.latency = integer(value, line);
  } else if (key == "tick_limit") {
    s.tick_limit = integer(value, line);
  } else if (key == "reorder") {
    s.reorder = integer(value, line);
  } else if (key == "loss") {
    auto d = Decimal::parse(value);
    if (!d || *d > Decimal::from_integer(1)) fail(line, "loss must be a probability");
    s.loss = *d;
  } else {
    fail(line, "unknown network key '" + std::string(key) + "'");
  }
}

constexpr std::array<std::string_view, 5> kSectionKeys{"personal", "previous_job", "company",
                                                       "company_terms", "employee_terms"};

Action script_action(const std::vector<std::string>& t, std::size_t line) {
  const auto& verb = t[1];
  auto need = [&](std::size_t n) {
    if (t.size() != n + 2) fail(line, verb + " takes " + std::to_string(n) + " arguments");
  };
  if (verb == "record") {
    need(4);
    return RecordAction{t[2], t[3], claim_kind(t[4], line), fields(t[5], line)};
  }
  if (verb == "claim") {
    need(4);
    return ClaimAction{t[2], claim_kind(t[3], line), t[4] == "-" ? "" : t[4], fields(t[5], line)};
  }
  if (verb == "apply") {
    need(2);
    return ApplyAction{t[2], t[3]};
  }
  if (verb == "require") {
    need(5);
    recruit::RequirementItem item;
    item.kind = claim_kind(t[3], line);
    auto p = recruit::Predicate::parse(t[4]);
    if (!p) fail(line, "malformed predicate '" + t[4] + "'");
    item.predicate = *p;
    auto w = Decimal::parse(t[5]);
    if (!w) fail(line, "malformed weight '" + t[5] + "'");
    item.weight = *w;
    item.mandatory = boolean(t[6], line);
    return RequireAction{t[2], std::move(item)};
  }
  if (verb == "rank") {
    need(1);
    return RankAction{t[2]};
  }
  if (verb == "hire") {
    if (t.size() < 4) fail(line, "hire takes a company, an applicant and optional sections");
    HireAction h{t[2], t[3], {}};
    std::array<bool, 5> seen{};
    for (std::size_t i = 4; i < t.size(); ++i) {
      auto colon = t[i].find(':');
      auto key = t[i].substr(0, colon);
      auto it = std::find(kSectionKeys.begin(), kSectionKeys.end(), key);
      if (colon == std::string::npos || it == kSectionKeys.end()) {
        fail(line, "expected section:fields, got '" + t[i] + "'");
      }
      auto idx = static_cast<std::size_t>(it - kSectionKeys.begin());
      if (seen[idx]) fail(line, "repeated section '" + key + "'");
      seen[idx] = true;
      h.sections[idx] = fields(std::string_view(t[i]).substr(colon + 1), line);
    }
    return h;
  }
  if (verb == "event") {
    need(4);
    auto kind = hrm::parse_hr_event_kind(t[4]);
    if (!kind) fail(line, "unknown HR event kind '" + t[4] + "'");
    return EventAction{t[2], t[3], *kind, fields(t[5], line)};
  }
  if (verb == "grant") {
    need(3);
    auto r = registry::Rights::parse(t[4]);
    if (!r) fail(line, "malformed rights '" + t[4] + "'");
    return GrantAction{t[2], t[3], *r};
  }
  fail(line, "unknown action '" + verb + "'");
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  Scenario s;
  enum class Section { None, Roster, Consensus, Network, Script } section = Section::None;
  std::string roster_text;  // keeps line numbering: other lines are blanked
  bool have_roster = false;
  std::size_t line_no = 0, start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    auto line = trim(raw);
    if (section == Section::Roster && !line.empty() && line.front() != '[') {
      roster_text += std::string(raw);
    }
    roster_text += '\n';
    if (line.empty() || line.front() == '#') continue;

    if (line.front() == '[') {
      if (line == "[roster]") {
        section = Section::Roster;
        have_roster = true;
      } else if (line == "[consensus]") {
        section = Section::Consensus;
      } else if (line == "[network]") {
        section = Section::Network;
      } else if (line == "[script]") {
        section = Section::Script;
      } else {
        fail(line_no, "unknown section " + std::string(line));
      }
      continue;
    }

    switch (section) {
      case Section::None: fail(line_no, "content before the first section");
      case Section::Roster: break;
      case Section::Consensus:
      case Section::Network: {
        auto eq = line.find('=');
        if (eq == std::string_view::npos) fail(line_no, "expected key = value");
        auto key = trim(line.substr(0, eq));
        auto value = trim(line.substr(eq + 1));
        if (section == Section::Consensus) {
          consensus_key(s, key, value, line_no);
        } else {
          network_key(s, key, value, line_no);
        }
        break;
      }
      case Section::Script: {
        std::vector<std::string> tokens;
        std::istringstream in{std::string(line)};
        for (std::string tok; in >> tok;) tokens.push_back(std::move(tok));
        if (tokens.size() < 2) fail(line_no, "expected <tick> <action> ...");
        auto tick = integer(tokens[0], line_no);
        if (!s.script.empty() && tick < s.script.back().tick) fail(line_no, "script ticks must not decrease");
        s.script.push_back({tick, script_action(tokens, line_no)});
        break;
      }
    }
  }
  if (!have_roster) throw SimnetError(SimnetErrc::MalformedScenario, "missing [roster] section");
  try {
    s.roster = registry::parse_roster(roster_text);
  } catch (const registry::RegistryError& e) {
    throw SimnetError(SimnetErrc::MalformedScenario, e.what());
  }
  check_scenario(s);
  return s;
}

}  // namespace hrchain::simnet
