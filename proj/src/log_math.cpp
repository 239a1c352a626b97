#include "bouch/log_math.hpp"

#include <array>
#include <numbers>

namespace bouch {

namespace {

constexpr std::array<std::uint64_t, 21> kFactorials = [] {
  std::array<std::uint64_t, 21> f{};
  f[0] = 1;
  for (std::size_t i = 1; i < f.size(); ++i) f[i] = f[i - 1] * i;
  return f;
}();

// 1/2 ln(2 pi)
constexpr double kHalfLog2Pi = 0.91893853320467274178;

}  // namespace

double log_factorial(std::uint64_t n) {
  if (n < kFactorials.size()) return std::log(static_cast<double>(kFactorials[n]));
  const double x = static_cast<double>(n);
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // 1/(12n) - 1/(360n^3) + 1/(1260n^5) - 1/(1680n^7)
  const double corr = inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 / 1680.0)));
  return x * std::log(x) - x + kHalfLog2Pi + 0.5 * std::log(x) + corr;
}

double log_factorial_per_n(double ln_n) {
  if (ln_n < 43.0) {  // n < 2^62
    const auto n = static_cast<std::uint64_t>(std::llround(std::exp(ln_n)));
    return log_factorial(n) / static_cast<double>(n);
  }
  const double inv = std::exp(-ln_n);
  return ln_n - 1.0 + (kHalfLog2Pi + 0.5 * ln_n) * inv + inv * inv / 12.0;
}

}  // namespace bouch
