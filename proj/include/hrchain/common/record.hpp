#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "hrchain/common/bytes.hpp"

namespace hrchain {

using FieldValue = std::variant<std::int64_t, std::string>;

/// An ordered set of typed `name=value` fields with one canonical encoding.
///
/// Claim statements, contract sections and HR event details are all
/// Records. Field order is the byte order of the names, so two Records with
/// the same content always encode to the same bytes.
class Record {
 public:
  Record() = default;

  /// Parses `name=value;name=value`. Values made of an optional '-' and
  /// digits become integers; everything else is kept as a string. An empty
  /// string yields an empty Record. Returns nullopt on a malformed field or
  /// a repeated name.
  static std::optional<Record> parse(std::string_view text);

  void set(std::string name, FieldValue value) { fields_[std::move(name)] = std::move(value); }
  const FieldValue* find(std::string_view name) const;
  bool empty() const { return fields_.empty(); }
  std::size_t size() const { return fields_.size(); }
  const std::map<std::string, FieldValue, std::less<>>& fields() const { return fields_; }

  /// Inverse of parse().
  std::string to_string() const;

  void encode(ByteWriter& out) const;
  Bytes encode() const;
  /// Rejects unsorted or duplicate names and unknown value tags.
  static Record decode(ByteReader& in);

  friend bool operator==(const Record&, const Record&) = default;

 private:
  std::map<std::string, FieldValue, std::less<>> fields_;
};

std::string to_string(const FieldValue& value);

}  // namespace hrchain
