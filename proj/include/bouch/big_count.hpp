#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include <gmpxx.h>

namespace bouch {

/// Exact non-negative integer of unbounded size. Used for W(T), N(T), L!
/// and the Bouch sequences, all of which leave 64-bit range almost at once.
class BigCount {
 public:
  BigCount() = default;
  BigCount(std::uint64_t v);  // NOLINT: implicit by intent
  explicit BigCount(mpz_class v);

  static BigCount factorial(std::uint64_t n);
  static BigCount pow(const BigCount& base, std::uint64_t exponent);
  static BigCount power_of_two(std::uint64_t exponent);
  /// Parses a decimal string; throws Error(InvalidArgument) on anything else.
  static BigCount from_string(const std::string& decimal);

  BigCount& operator+=(const BigCount& rhs);
  BigCount& operator*=(const BigCount& rhs);
  friend BigCount operator+(BigCount lhs, const BigCount& rhs) { return lhs += rhs; }
  friend BigCount operator*(BigCount lhs, const BigCount& rhs) { return lhs *= rhs; }

  friend bool operator==(const BigCount& a, const BigCount& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Quotient when `divisor` divides *this, std::nullopt otherwise.
  std::optional<BigCount> divide_exact(const BigCount& divisor) const;
  bool divisible_by(const BigCount& divisor) const;

  bool is_zero() const { return sgn(v_) == 0; }
  bool fits_u64() const;
  std::uint64_t to_u64() const;  // throws Error(TooLarge) if it does not fit
  std::size_t bit_length() const;

  /// Natural logarithm; accurate to a few ulp regardless of magnitude.
  double log() const;

  std::string str() const { return v_.get_str(10); }
  const mpz_class& mpz() const { return v_; }

 private:
  mpz_class v_{0};
};

/// Product of all values, multiplied pairwise in a balanced tree so that the
/// operands at each level have similar size.
BigCount product(std::span<const std::uint64_t> values);

/// lo * (lo+1) * ... * hi; empty range (lo > hi) gives 1.
BigCount range_product(std::uint64_t lo, std::uint64_t hi);

}  // namespace bouch
