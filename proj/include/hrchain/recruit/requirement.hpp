#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hrchain/common/decimal.hpp"
#include "hrchain/common/record.hpp"
#include "hrchain/recruit/claim.hpp"

namespace hrchain::recruit {

enum class CompareOp { Any, Eq, Ge, Le, Gt, Lt };

/// Equality or threshold test over one statement field. `Any` matches every
/// statement; thresholds only hold for integer fields.
struct Predicate {
  CompareOp op = CompareOp::Any;
  std::string field;
  FieldValue value;

  /// `*` (or empty) for Any, otherwise `field==value`, `field>=n`,
  /// `field<=n`, `field>n`, `field<n`.
  static std::optional<Predicate> parse(std::string_view text);
  bool matches(const Record& statement) const;
  std::string to_string() const;

  friend bool operator==(const Predicate&, const Predicate&) = default;
};

struct RequirementItem {
  ClaimKind kind = ClaimKind::Education;
  Predicate predicate;
  Decimal weight;
  bool mandatory = false;

  friend bool operator==(const RequirementItem&, const RequirementItem&) = default;
};

/// A company's hiring requirements.
struct RequirementSpec {
  ParticipantId company;
  std::vector<RequirementItem> items;

  /// Throws RecruitError{EmptyRequirementSpec} when there are no items.
  void validate() const;
};

}  // namespace hrchain::recruit
