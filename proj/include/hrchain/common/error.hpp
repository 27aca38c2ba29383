#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hrchain {

/// Exception carrying a module-specific error code next to the message.
///
/// Each module declares its own code enum plus a `to_string(Code)` overload;
/// callers catch `CodedError<Code>` and branch on `code()`.
template <typename Code>
class CodedError : public std::runtime_error {
 public:
  CodedError(Code code, const std::string& detail)
      : std::runtime_error(format(code, detail)), code_(code) {}
  explicit CodedError(Code code) : CodedError(code, std::string{}) {}

  Code code() const noexcept { return code_; }

 private:
  static std::string format(Code code, const std::string& detail) {
    std::string out{to_string(code)};
    if (!detail.empty()) {
      out += ": ";
      out += detail;
    }
    return out;
  }

  Code code_;
};

}  // namespace hrchain
