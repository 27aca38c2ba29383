#include "hrchain/common/decimal.hpp"

#include <limits>

namespace hrchain {

std::optional<Decimal> Decimal::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::int64_t whole = 0;
  std::int64_t frac = 0;
  int frac_digits = 0;
  bool seen_point = false;
  bool seen_digit = false;
  for (char c : text) {
    if (c == '.') {
      if (seen_point) return std::nullopt;
      seen_point = true;
      continue;
    }
    if (c < '0' || c > '9') return std::nullopt;
    seen_digit = true;
    int d = c - '0';
    if (seen_point) {
      if (++frac_digits > 6) return std::nullopt;
      frac = frac * 10 + d;
    } else {
      if (whole > (std::numeric_limits<std::int64_t>::max() / kScale - d) / 10) return std::nullopt;
      whole = whole * 10 + d;
    }
  }
  if (!seen_digit) return std::nullopt;
  for (int i = frac_digits; i < 6; ++i) frac *= 10;
  return Decimal(whole * kScale + frac);
}

std::string Decimal::to_string() const {
  std::string out = std::to_string(units_ / kScale);
  std::int64_t frac = units_ % kScale;
  if (frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(0, 6 - digits.size(), '0');
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    out += '.';
    out += digits;
  }
  return out;
}

__extension__ using u128 = unsigned __int128;

std::uint64_t Decimal::ceil_mul(std::uint64_t n) const {
  auto product = static_cast<u128>(units_) * n;
  auto scale = static_cast<u128>(kScale);
  return static_cast<std::uint64_t>((product + scale - 1) / scale);
}

}  // namespace hrchain
