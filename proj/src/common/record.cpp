#include "hrchain/common/record.hpp"

#include <charconv>

namespace hrchain {

namespace {

constexpr std::uint8_t kIntTag = 0;
constexpr std::uint8_t kStringTag = 1;

bool is_reserved(char c) { return c == ';' || c == '=' || c == ',' || c == '\n' || c == '\r'; }

FieldValue classify(std::string_view raw) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), value);
  if (!raw.empty() && ec == std::errc{} && ptr == raw.data() + raw.size() && raw.front() != '+') {
    // Reject forms that would not print back identically, e.g. "007" or "-0".
    if (std::to_string(value) == raw) return value;
  }
  return std::string(raw);
}

}  // namespace

std::optional<Record> Record::parse(std::string_view text) {
  Record out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    auto field = text.substr(start, end - start);
    auto eq = field.find('=');
    if (eq == std::string_view::npos || eq == 0) return std::nullopt;
    auto name = field.substr(0, eq);
    auto value = field.substr(eq + 1);
    for (char c : name) {
      if (is_reserved(c) || c == ' ' || c == '\t') return std::nullopt;
    }
    for (char c : value) {
      if (is_reserved(c)) return std::nullopt;
    }
    auto [it, inserted] = out.fields_.emplace(std::string(name), classify(value));
    if (!inserted) return std::nullopt;
    start = end + 1;
    if (end == text.size()) break;
  }
  return out;
}

const FieldValue* Record::find(std::string_view name) const {
  auto it = fields_.find(name);
  return it == fields_.end() ? nullptr : &it->second;
}

std::string to_string(const FieldValue& value) {
  if (const auto* i = std::get_if<std::int64_t>(&value)) return std::to_string(*i);
  return std::get<std::string>(value);
}

std::string Record::to_string() const {
  std::string out;
  for (const auto& [name, value] : fields_) {
    if (!out.empty()) out += ';';
    out += name;
    out += '=';
    out += hrchain::to_string(value);
  }
  return out;
}

void Record::encode(ByteWriter& out) const {
  out.u32(static_cast<std::uint32_t>(fields_.size()));
  for (const auto& [name, value] : fields_) {
    out.str16(name);
    if (const auto* i = std::get_if<std::int64_t>(&value)) {
      out.u8(kIntTag);
      out.i64(*i);
    } else {
      out.u8(kStringTag);
      out.bytes32(as_bytes(std::get<std::string>(value)));
    }
  }
}

Bytes Record::encode() const {
  ByteWriter w;
  encode(w);
  return std::move(w).take();
}

Record Record::decode(ByteReader& in) {
  Record out;
  auto count = in.u32();
  const std::string* previous = nullptr;
  for (std::uint32_t i = 0; i < count; ++i) {
    auto name = in.str16();
    if (name.empty() || (previous != nullptr && !(*previous < name))) {
      throw DecodeError(DecodeErrc::NonCanonical, "record field order");
    }
    auto tag = in.u8();
    FieldValue value;
    if (tag == kIntTag) {
      value = in.i64();
    } else if (tag == kStringTag) {
      auto raw = in.bytes32();
      value = std::string(raw.begin(), raw.end());
    } else {
      throw DecodeError(DecodeErrc::BadTag, "record value tag");
    }
    auto it = out.fields_.emplace_hint(out.fields_.end(), std::move(name), std::move(value));
    previous = &it->first;
  }
  return out;
}

}  // namespace hrchain
