#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bouch/big_count.hpp"
#include "bouch/log_math.hpp"
#include "bouch/tree_generators.hpp"

namespace bouch {

/// Guard for the exact weight computations.
inline constexpr std::uint64_t kExactWeightLimit = 1'000'000;

/// Series are cut once a term drops below this.
inline constexpr double kSeriesThreshold = 1e-300;

/// L_j by the telescoping sum l_j + sum_k b_j...b_{k+1} l_k and by
/// E_j (1 + 4 sum E_{k-2}/E_{k-1}); throws Error(InternalMismatch) if the two
/// disagree.
BigCount bond_count(const BouchParams& params, std::size_t j);

/// Exact W_j from the weight recursion with exact backbone weights.
BigCount exact_weight(const BouchParams& params, std::size_t j);

/// The recursion W_j <= W_{j-1}^{b_j} L_j^{l_j} iterated literally from W_1 = l_1!.
BigCount weight_recursion_bound(const BouchParams& params, std::size_t j);

/// Overflow-safe view of generation k: a_k as a double, +inf beyond range.
std::vector<double> tower_sequence(std::uint64_t a0, std::size_t j);

/// E_{k}/E_{k+1} = (a_k / 2^{a_k})^2.
double square_ratio(double a);

/// Log-domain form of the weight bound, normalized by E_j so that it stays
/// finite for every j.
struct LogWeightBound {
  std::uint64_t a0 = 1;
  std::size_t j = 1;
  double log_w_per_e = 0.0;  // upper bound on log W_j / E_j
  double l_over_e = 1.0;     // L_j / E_j
  double log_e = 0.0;        // log E_j, +inf when out of range
  /// log W_j bound itself, when representable.
  std::optional<LogValue> log_w;
};

LogWeightBound weight_recursion_bound_log(std::uint64_t a0, std::size_t j);

struct Epsilon0Series {
  double value = 0.0;
  std::vector<double> terms;
  double tail_bound = 0.0;
};

Epsilon0Series epsilon0_series(std::uint64_t a0);
double epsilon0(std::uint64_t a0);

struct SeriesTerm {
  std::size_t k = 0;
  double a_km2 = 0.0;  // a_{k-2}
  double term = 0.0;
};

struct ConstantsReport {
  std::uint64_t a0 = 1;
  double epsilon0 = 0.0;
  double epsilon0_tail_bound = 0.0;
  double C1 = 0.0;
  double C1_tail_bound = 0.0;
  std::size_t truncation_k = 0;  // first k left out of C1
  double log_w1_per_e1 = 0.0;
  double C2 = 0.0;
  double C = 0.0;  // exp(C2); +inf if C2 > ~709
  std::vector<SeriesTerm> terms;
};

ConstantsReport constants(std::uint64_t a0);

enum class BoundMode { Exact, Log };

struct MainBoundReport {
  std::uint64_t a0 = 1;
  std::size_t j = 1;
  BoundMode mode = BoundMode::Log;
  double C2 = 0.0;
  double log_w_per_e = 0.0;  // exact W_j in exact mode, bound in log mode
  double l_over_e = 1.0;
  double margin_per_bond = 0.0;  // (C2 L_j - log W_j) / L_j
  /// sum over k <= j only; the smallest C2 that works for this j alone.
  double tight_C2 = 0.0;
  std::optional<std::string> bond_count;  // L_j when held exactly
  /// log N_j and log(L_j!) - L_j log C, when representable.
  std::optional<double> log_n;
  std::optional<double> log_n_lower;
  bool passed = false;
};

/// Relative slack allowed on the margin for log-arithmetic rounding.
inline constexpr double kMarginTolerance = 1e-9;

/// Throws Error(BoundViolated) when the margin is negative beyond tolerance.
MainBoundReport verify_main_bound(std::uint64_t a0, std::size_t j, BoundMode mode = BoundMode::Log);

struct StructureReport {
  std::uint64_t a0 = 1;
  std::size_t j = 2;
  bool exact = false;
  std::string l_over_e_exact;  // reduced fraction, when exact
  double l_over_e = 1.0;
  double first_generation_fraction = 1.0;
  double backbone_fraction = 0.0;
  double backbone_fraction_bound = 0.0;
  double epsilon0 = 0.0;
  bool ele_holds = false;       // E_j <= L_j <= (1+eps0) E_j
  bool backbone_holds = false;  // l_j / L_j <= 4 (a_{j-2}/2^{a_{j-2}})^2
};

StructureReport structure_fractions(std::uint64_t a0, std::size_t j);

}  // namespace bouch
