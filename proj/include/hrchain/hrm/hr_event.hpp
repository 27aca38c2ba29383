#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "hrchain/common/record.hpp"
#include "hrchain/registry/identity.hpp"
#include "hrchain/registry/keys.hpp"

namespace hrchain::hrm {

using registry::ParticipantId;

enum class HrEventKind : std::uint8_t {
  Salary = 0,
  Title = 1,
  Promotion = 2,
  Training = 3,
  Leave = 4,
  Performance = 5,
  Transfer = 6,
};

std::string_view to_string(HrEventKind kind);
std::optional<HrEventKind> parse_hr_event_kind(std::string_view text);

/// Ongoing HR record issued by the subject's current employer.
struct HrEventRecord {
  ParticipantId subject;
  HrEventKind kind = HrEventKind::Salary;
  Record details;
  std::uint64_t effective_tick = 0;
  ParticipantId issuer;
  registry::Signature issuer_signature;

  Bytes body_bytes() const;
  void sign(const registry::KeyPair& issuer_keys);
  bool signature_valid() const;

  /// A Transfer carrying `terminated=true` ends the current employment.
  bool terminates_employment() const;

  Bytes encode() const;
  static HrEventRecord decode(ByteView payload);

  friend bool operator==(const HrEventRecord&, const HrEventRecord&) = default;
};

}  // namespace hrchain::hrm
