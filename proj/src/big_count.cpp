#include "bouch/big_count.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "bouch/error.hpp"

namespace bouch {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyTree: return "EmptyTree";
    case ErrorCode::NotUnitBond: return "NotUnitBond";
    case ErrorCode::DuplicateBond: return "DuplicateBond";
    case ErrorCode::RootDetached: return "RootDetached";
    case ErrorCode::HasCycle: return "HasCycle";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::OddLength: return "OddLength";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ConstraintViolated: return "ConstraintViolated";
    case ErrorCode::OverlapDetected: return "OverlapDetected";
    case ErrorCode::Stuck: return "Stuck";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::InternalNonDivisible: return "InternalNonDivisible";
    case ErrorCode::InternalMismatch: return "InternalMismatch";
    case ErrorCode::BoundViolated: return "BoundViolated";
  }
  return "Unknown";
}

namespace {

mpz_class from_u64(std::uint64_t v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return z;
}

mpz_class balanced(std::span<const std::uint64_t> values) {
  if (values.empty()) return 1;
  if (values.size() <= 8) {
    mpz_class acc = from_u64(values[0]);
    for (std::size_t i = 1; i < values.size(); ++i) acc *= from_u64(values[i]);
    return acc;
  }
  const std::size_t mid = values.size() / 2;
  return balanced(values.first(mid)) * balanced(values.subspan(mid));
}

mpz_class balanced_range(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) return 1;
  if (hi - lo < 16) {
    mpz_class acc = from_u64(lo);
    for (std::uint64_t v = lo + 1; v <= hi; ++v) acc *= from_u64(v);
    return acc;
  }
  const std::uint64_t mid = lo + (hi - lo) / 2;
  return balanced_range(lo, mid) * balanced_range(mid + 1, hi);
}

}  // namespace

BigCount::BigCount(std::uint64_t v) : v_(from_u64(v)) {}

BigCount::BigCount(mpz_class v) : v_(std::move(v)) {
  if (sgn(v_) < 0) throw Error(ErrorCode::InvalidArgument, "BigCount must be non-negative");
}

BigCount BigCount::factorial(std::uint64_t n) {
  if (n > static_cast<std::uint64_t>(~0UL)) throw Error(ErrorCode::TooLarge, "factorial argument");
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
  return BigCount(std::move(z));
}

BigCount BigCount::pow(const BigCount& base, std::uint64_t exponent) {
  mpz_class z;
  mpz_pow_ui(z.get_mpz_t(), base.v_.get_mpz_t(), static_cast<unsigned long>(exponent));
  return BigCount(std::move(z));
}

BigCount BigCount::power_of_two(std::uint64_t exponent) {
  mpz_class z;
  mpz_setbit(z.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent));
  return BigCount(std::move(z));
}

BigCount BigCount::from_string(const std::string& decimal) {
  if (decimal.empty() || decimal.find_first_not_of("0123456789") != std::string::npos)
    throw Error(ErrorCode::InvalidArgument, "not a decimal integer: '" + decimal + "'");
  return BigCount(mpz_class(decimal, 10));
}

BigCount& BigCount::operator+=(const BigCount& rhs) {
  v_ += rhs.v_;
  return *this;
}

BigCount& BigCount::operator*=(const BigCount& rhs) {
  v_ *= rhs.v_;
  return *this;
}

std::optional<BigCount> BigCount::divide_exact(const BigCount& divisor) const {
  if (divisor.is_zero() || !divisible_by(divisor)) return std::nullopt;
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), v_.get_mpz_t(), divisor.v_.get_mpz_t());
  return BigCount(std::move(q));
}

bool BigCount::divisible_by(const BigCount& divisor) const {
  return mpz_divisible_p(v_.get_mpz_t(), divisor.v_.get_mpz_t()) != 0;
}

bool BigCount::fits_u64() const { return mpz_sizeinbase(v_.get_mpz_t(), 2) <= 64; }

std::uint64_t BigCount::to_u64() const {
  if (!fits_u64()) throw Error(ErrorCode::TooLarge, "value exceeds 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, v_.get_mpz_t());
  return out;
}

std::size_t BigCount::bit_length() const {
  return is_zero() ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2);
}

double BigCount::log() const {
  if (is_zero()) return -HUGE_VAL;
  long exp2 = 0;
  const double mantissa = mpz_get_d_2exp(&exp2, v_.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exp2) * std::numbers::ln2;
}

BigCount product(std::span<const std::uint64_t> values) { return BigCount(balanced(values)); }

BigCount range_product(std::uint64_t lo, std::uint64_t hi) { return BigCount(balanced_range(lo, hi)); }

}  // namespace bouch
