#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace hrchain {

/// Exact non-negative rational with a fixed denominator of 10^6.
///
/// Used for requirement weights, matching scores and the mining-diversity
/// parameter, which all arrive as short decimal literals. Sums and
/// comparisons are exact, so rankings never depend on float rounding.
class Decimal {
 public:
  static constexpr std::int64_t kScale = 1'000'000;

  constexpr Decimal() = default;
  static constexpr Decimal from_units(std::int64_t units) { return Decimal(units); }
  static constexpr Decimal from_integer(std::int64_t whole) { return Decimal(whole * kScale); }
  /// Accepts `123`, `0.75`, `.5`; at most six fractional digits, no sign.
  static std::optional<Decimal> parse(std::string_view text);

  constexpr std::int64_t units() const { return units_; }
  /// Shortest decimal rendering: `4`, `0.75`, `2.5`.
  std::string to_string() const;
  /// ceil(value * n) for a non-negative integer n.
  std::uint64_t ceil_mul(std::uint64_t n) const;

  friend constexpr Decimal operator+(Decimal a, Decimal b) { return Decimal(a.units_ + b.units_); }
  constexpr Decimal& operator+=(Decimal other) {
    units_ += other.units_;
    return *this;
  }
  friend constexpr auto operator<=>(Decimal, Decimal) = default;

 private:
  constexpr explicit Decimal(std::int64_t units) : units_(units) {}
  std::int64_t units_ = 0;
};

}  // namespace hrchain
