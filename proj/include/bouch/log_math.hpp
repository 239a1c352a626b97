#pragma once

#include <cmath>
#include <compare>
#include <cstdint>

namespace bouch {

/// A positive quantity held by its natural logarithm.
struct LogValue {
  double ln = 0.0;

  static LogValue of(double x) { return LogValue{std::log(x)}; }

  friend LogValue operator*(LogValue a, LogValue b) { return LogValue{a.ln + b.ln}; }
  friend LogValue operator/(LogValue a, LogValue b) { return LogValue{a.ln - b.ln}; }
  LogValue pow(double exponent) const { return LogValue{ln * exponent}; }
  double value() const { return std::exp(ln); }

  friend auto operator<=>(LogValue, LogValue) = default;
};

/// ln(n!). Exact table for n <= 20, Stirling series with four correction
/// terms above that (relative error well under 1e-15).
double log_factorial(std::uint64_t n);

/// ln(n!) / n for n = exp(ln_n), valid for any n >= 1 including values far
/// beyond 64 bits.
double log_factorial_per_n(double ln_n);

}  // namespace bouch
