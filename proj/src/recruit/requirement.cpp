#include "hrchain/recruit/requirement.hpp"

#include <array>
#include <charconv>

#include "hrchain/recruit/verification.hpp"

namespace hrchain::recruit {

namespace {

struct OpToken {
  std::string_view text;
  CompareOp op;
};

// Two-character operators first so `>=` is not read as `>`.
constexpr std::array<OpToken, 5> kOps{{
    {"==", CompareOp::Eq},
    {">=", CompareOp::Ge},
    {"<=", CompareOp::Le},
    {">", CompareOp::Gt},
    {"<", CompareOp::Lt},
}};

std::string_view op_text(CompareOp op) {
  for (const auto& t : kOps) {
    if (t.op == op) return t.text;
  }
  return "*";
}

}  // namespace

std::optional<Predicate> Predicate::parse(std::string_view text) {
  if (text.empty() || text == "*") return Predicate{};
  for (const auto& token : kOps) {
    auto pos = text.find(token.text);
    if (pos == std::string_view::npos || pos == 0) continue;
    Predicate p;
    p.op = token.op;
    p.field = std::string(text.substr(0, pos));
    auto raw = text.substr(pos + token.text.size());
    if (raw.empty()) return std::nullopt;
    auto record = Record::parse("v=" + std::string(raw));
    if (!record) return std::nullopt;
    p.value = *record->find("v");
    if (p.op != CompareOp::Eq && !std::holds_alternative<std::int64_t>(p.value)) return std::nullopt;
    if (p.field.find_first_of("=<>;, ") != std::string::npos) return std::nullopt;
    return p;
  }
  return std::nullopt;
}

bool Predicate::matches(const Record& statement) const {
  if (op == CompareOp::Any) return true;
  const FieldValue* actual = statement.find(field);
  if (actual == nullptr) return false;
  if (op == CompareOp::Eq) return *actual == value;
  const auto* lhs = std::get_if<std::int64_t>(actual);
  const auto* rhs = std::get_if<std::int64_t>(&value);
  if (lhs == nullptr || rhs == nullptr) return false;
  switch (op) {
    case CompareOp::Ge: return *lhs >= *rhs;
    case CompareOp::Le: return *lhs <= *rhs;
    case CompareOp::Gt: return *lhs > *rhs;
    case CompareOp::Lt: return *lhs < *rhs;
    default: return false;
  }
}

std::string Predicate::to_string() const {
  if (op == CompareOp::Any) return "*";
  return field + std::string(op_text(op)) + hrchain::to_string(value);
}

void RequirementSpec::validate() const {
  if (items.empty()) throw RecruitError(RecruitErrc::EmptyRequirementSpec);
}

}  // namespace hrchain::recruit
