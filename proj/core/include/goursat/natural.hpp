#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace goursat {

/// Arbitrary-precision unsigned integer.
///
/// Derived-vector entries grow like Fibonacci numbers in the word length, so
/// 64-bit arithmetic overflows around length 90. This class supports exactly
/// what the library needs -- addition, checked subtraction, multiplication,
/// comparison and decimal I/O -- on base-10^9 limbs. Nothing ever passes
/// through floating point.
class Natural {
 public:
  Natural() = default;  // zero
  Natural(std::uint64_t value);

  /// Parses a non-empty string of decimal digits. Throws std::invalid_argument
  /// on anything else.
  static Natural from_decimal(std::string_view text);

  bool is_zero() const { return limbs_.empty(); }

  Natural& operator+=(const Natural& rhs);
  /// Throws std::underflow_error when rhs > *this.
  Natural& operator-=(const Natural& rhs);
  Natural& operator*=(const Natural& rhs);

  friend Natural operator+(Natural lhs, const Natural& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend Natural operator-(Natural lhs, const Natural& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend Natural operator*(const Natural& lhs, const Natural& rhs);

  friend bool operator==(const Natural&, const Natural&) = default;
  friend std::strong_ordering operator<=>(const Natural& lhs,
                                          const Natural& rhs);

  /// Decimal representation, no leading zeros ("0" for zero).
  std::string str() const;

  /// The value as a machine integer, if it fits.
  std::optional<std::uint64_t> to_uint64() const;

 private:
  static constexpr std::uint64_t kBase = 1'000'000'000;

  void trim();

  // Little endian base-10^9 limbs; no trailing zero limbs; empty means zero.
  std::vector<std::uint32_t> limbs_;
};

/// Fibonacci numbers with the convention F_1 = F_2 = 1. Requires n >= 1.
Natural fibonacci(int n);

}  // namespace goursat
