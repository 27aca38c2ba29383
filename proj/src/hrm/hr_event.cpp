#include "hrchain/hrm/hr_event.hpp"

#include <array>

namespace hrchain::hrm {

namespace {

constexpr std::array<std::string_view, 7> kNames{
    "Salary", "Title", "Promotion", "Training", "Leave", "Performance", "Transfer",
};

void write_body(ByteWriter& w, const HrEventRecord& e) {
  w.raw(e.subject.value.view());
  w.u8(static_cast<std::uint8_t>(e.kind));
  e.details.encode(w);
  w.u64(e.effective_tick);
  w.raw(e.issuer.value.view());
}

}  // namespace

std::string_view to_string(HrEventKind kind) {
  auto idx = static_cast<std::size_t>(kind);
  return idx < kNames.size() ? kNames[idx] : "Unknown";
}

std::optional<HrEventKind> parse_hr_event_kind(std::string_view text) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == text) return static_cast<HrEventKind>(i);
  }
  return std::nullopt;
}

Bytes HrEventRecord::body_bytes() const {
  ByteWriter w;
  w.str16("hrchain/hr-event");
  write_body(w, *this);
  return std::move(w).take();
}

void HrEventRecord::sign(const registry::KeyPair& issuer_keys) {
  issuer_signature = registry::sign(issuer_keys, body_bytes());
}

bool HrEventRecord::signature_valid() const {
  return registry::verify_signed_by(issuer, body_bytes(), issuer_signature);
}

bool HrEventRecord::terminates_employment() const {
  if (kind != HrEventKind::Transfer) return false;
  const auto* v = details.find("terminated");
  return v != nullptr && *v == FieldValue{std::string("true")};
}

Bytes HrEventRecord::encode() const {
  ByteWriter w;
  write_body(w, *this);
  registry::encode_signature(w, issuer_signature);
  return std::move(w).take();
}

HrEventRecord HrEventRecord::decode(ByteView payload) {
  ByteReader in(payload);
  HrEventRecord e;
  e.subject = ParticipantId{ledger::Digest(in.fixed<ledger::Digest::kSize>())};
  auto kind = in.u8();
  if (kind >= kNames.size()) throw DecodeError(DecodeErrc::BadTag, "hr event kind");
  e.kind = static_cast<HrEventKind>(kind);
  e.details = Record::decode(in);
  e.effective_tick = in.u64();
  e.issuer = ParticipantId{ledger::Digest(in.fixed<ledger::Digest::kSize>())};
  e.issuer_signature = registry::decode_signature(in);
  in.finish();
  return e;
}

}  // namespace hrchain::hrm
