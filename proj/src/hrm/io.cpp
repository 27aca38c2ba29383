#include "hrchain/hrm/io.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "hrchain/hrm/hire.hpp"

namespace hrchain::hrm {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::size_t line, const std::string& why) {
  throw HrmError(HrmErrc::ParseError, "line " + std::to_string(line) + ": " + why);
}

ParticipantId resolve(std::string_view name, const registry::NameBook& names, std::size_t line) {
  auto id = names.id_of(name);
  if (!id) throw HrmError(HrmErrc::UnknownParticipant, "line " + std::to_string(line) + ": " + std::string(name));
  return *id;
}

}  // namespace

EmploymentContract parse_contract(std::string_view text, const registry::NameBook& names) {
  EmploymentContract contract;
  std::optional<std::size_t> section;
  std::array<bool, kContractSections.size()> seen{};
  bool have_employee = false, have_employer = false;
  std::size_t line_no = 0, start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    if (line.front() == '[') {
      if (line.back() != ']') fail(line_no, "unterminated section heading");
      auto title = trim(line.substr(1, line.size() - 2));
      auto it = std::find(kContractSections.begin(), kContractSections.end(), title);
      if (it == kContractSections.end()) fail(line_no, "unknown section '" + std::string(title) + "'");
      section = static_cast<std::size_t>(it - kContractSections.begin());
      if (seen[*section]) fail(line_no, "repeated section '" + std::string(title) + "'");
      seen[*section] = true;
      continue;
    }

    auto eq = line.find('=');
    if (eq == std::string_view::npos || eq == 0) fail(line_no, "expected key=value");
    auto key = trim(line.substr(0, eq));
    auto value = trim(line.substr(eq + 1));
    if (!section) {
      if (key == "employee" && !have_employee) {
        contract.employee = resolve(value, names, line_no);
        have_employee = true;
      } else if (key == "employer" && !have_employer) {
        contract.employer = resolve(value, names, line_no);
        have_employer = true;
      } else {
        fail(line_no, "unexpected '" + std::string(key) + "' before first section");
      }
      continue;
    }
    // Reuse Record's value typing on a single field.
    auto field = Record::parse(std::string(key) + "=" + std::string(value));
    if (!field || field->size() != 1) fail(line_no, "malformed field");
    auto& target = contract.section(*section);
    if (target.find(key) != nullptr) fail(line_no, "repeated field '" + std::string(key) + "'");
    const auto& [name, v] = *field->fields().begin();
    target.set(name, v);
  }
  if (!have_employee) fail(line_no, "missing employee");
  if (!have_employer) fail(line_no, "missing employer");
  return contract;
}

std::string format_contract(const EmploymentContract& contract, const registry::NameBook& names) {
  std::string out = "employee=" + names.name_of(contract.employee) + "\n";
  out += "employer=" + names.name_of(contract.employer) + "\n";
  for (std::size_t i = 0; i < kContractSections.size(); ++i) {
    out += "[" + std::string(kContractSections[i]) + "]\n";
    for (const auto& [name, value] : contract.section(i).fields()) {
      out += name + "=" + hrchain::to_string(value) + "\n";
    }
  }
  return out;
}

}  // namespace hrchain::hrm
