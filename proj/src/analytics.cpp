#include "bouch/analytics.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "bouch/error.hpp"
#include "bouch/lattice_tree.hpp"

namespace bouch {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLn2 = std::numbers::ln2;

void require_generation(const BouchParams& params, std::size_t j) {
  if (j < 1 || j > params.j)
    throw Error(ErrorCode::InvalidArgument,
                "generation " + std::to_string(j) + " outside 1.." + std::to_string(params.j));
}

void require_weight_guard(const BouchParams& params, std::size_t j) {
  if (params.L[j] > BigCount(kExactWeightLimit))
    throw Error(ErrorCode::TooLarge, "L_" + std::to_string(j) + " exceeds the exact-weight limit of " +
                                         std::to_string(kExactWeightLimit) + " bonds");
}

/// (4 E_{k-2} / E_{k-1}) log L_k for a = a_{k-2}, using log E_k = 2 a_{k-1} ln 2
/// = 2^{a+1} ln 2, so the product is 8 ln2 a^2 / 2^a + 4 (a/2^a)^2 log(L_k/E_k).
double weight_series_term(double a, double log_l_over_e) {
  if (!(a <= 4096.0)) return 0.0;
  const int ia = static_cast<int>(a);
  return 8.0 * kLn2 * std::ldexp(a * a, -ia) + 4.0 * square_ratio(a) * log_l_over_e;
}

/// log W_1 / E_1 = log(E_1!) / E_1 with E_1 = 4^{a0}.
double log_w1_per_e1(std::uint64_t a0) {
  if (a0 <= 31) {
    const std::uint64_t e1 = std::uint64_t{1} << (2 * a0);
    return log_factorial(e1) / static_cast<double>(e1);
  }
  return log_factorial_per_n(2.0 * static_cast<double>(a0) * kLn2);
}

double tail_bound_from(double omitted) { return 2.0 * std::max(omitted, std::numeric_limits<double>::denorm_min()); }

mpq_class exact_square_ratio(std::uint64_t a) {
  mpz_class den;
  mpz_setbit(den.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * a));
  mpq_class q(mpz_class(a) * mpz_class(a), den);
  q.canonicalize();
  return q;
}

std::string fraction_string(const mpq_class& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

BigCount bond_count(const BouchParams& params, std::size_t j) {
  require_generation(params, j);

  // Telescoping form: l_j + sum_{k<j} b_j b_{j-1} ... b_{k+1} l_k.
  BigCount telescoped = params.ell[j];
  for (std::size_t k = 1; k < j; ++k) {
    BigCount term = params.ell[k];
    for (std::size_t i = k + 1; i <= j; ++i) term *= params.b[i];
    telescoped += term;
  }

  // Closed form: E_j (1 + 4 sum_{k=2}^{j} E_{k-2}/E_{k-1}).
  mpq_class sum = 0;
  for (std::size_t k = 2; k <= j; ++k) {
    mpq_class r(params.E[k - 2].mpz(), params.E[k - 1].mpz());
    r.canonicalize();
    sum += r;
  }
  mpq_class closed = mpq_class(params.E[j].mpz()) * (1 + 4 * sum);
  closed.canonicalize();

  if (closed.get_den() != 1 || mpz_class(closed.get_num()) != telescoped.mpz())
    throw Error(ErrorCode::InternalMismatch, "telescoped and closed-form L_" + std::to_string(j) + " disagree");
  return telescoped;
}

BigCount exact_weight(const BouchParams& params, std::size_t j) {
  require_generation(params, j);
  require_weight_guard(params, j);

  BigCount w = BigCount::factorial(params.ell[1].to_u64());
  for (std::size_t k = 2; k <= j; ++k) {
    const std::uint64_t len = params.ell[k].to_u64();
    const std::uint64_t branches = params.b[k].to_u64();
    const std::uint64_t spacing = len / branches;
    const std::uint64_t sub = params.L[k - 1].to_u64();
    // Backbone bond i carries the backbone beyond it plus every branch rooted
    // at or past its far end. Between branch sites the weights are consecutive.
    BigCount backbone(1);
    for (std::uint64_t m = 1; m <= branches; ++m) {
      const std::uint64_t hanging = sub * (branches - m + 1);
      const std::uint64_t hi = len - (m - 1) * spacing + hanging;
      const std::uint64_t lo = 1 + len - m * spacing + hanging;
      backbone *= range_product(lo, hi);
    }
    w = BigCount::pow(w, branches) * backbone;
  }
  return w;
}

BigCount weight_recursion_bound(const BouchParams& params, std::size_t j) {
  require_generation(params, j);
  require_weight_guard(params, j);
  BigCount bound = BigCount::factorial(params.ell[1].to_u64());
  for (std::size_t k = 2; k <= j; ++k) {
    bound = BigCount::pow(bound, params.b[k].to_u64()) * BigCount::pow(params.L[k], params.ell[k].to_u64());
  }
  return bound;
}

std::vector<double> tower_sequence(std::uint64_t a0, std::size_t j) {
  if (a0 < 1) throw Error(ErrorCode::InvalidArgument, "a0 must be >= 1");
  std::vector<double> a{static_cast<double>(a0)};
  for (std::size_t k = 1; k <= j; ++k) {
    const double prev = a.back();
    a.push_back(prev >= 1024.0 ? kInf : std::ldexp(1.0, static_cast<int>(prev)));
  }
  return a;
}

double square_ratio(double a) {
  if (!(a <= 4096.0)) return 0.0;
  return std::ldexp(a * a, -2 * static_cast<int>(a));
}

LogWeightBound weight_recursion_bound_log(std::uint64_t a0, std::size_t j) {
  if (j < 1) throw Error(ErrorCode::InvalidArgument, "generation must be >= 1");
  const auto a = tower_sequence(a0, j);
  LogWeightBound out;
  out.a0 = a0;
  out.j = j;
  out.log_w_per_e = log_w1_per_e1(a0);
  double ratios = 0.0;
  for (std::size_t k = 2; k <= j; ++k) {
    ratios += square_ratio(a[k - 2]);
    out.log_w_per_e += weight_series_term(a[k - 2], std::log1p(4.0 * ratios));
  }
  out.l_over_e = 1.0 + 4.0 * ratios;
  out.log_e = 2.0 * a[j - 1] * kLn2;
  if (out.log_e < 700.0) out.log_w = LogValue{out.log_w_per_e * std::exp(out.log_e)};
  return out;
}

Epsilon0Series epsilon0_series(std::uint64_t a0) {
  if (a0 < 1) throw Error(ErrorCode::InvalidArgument, "a0 must be >= 1");
  Epsilon0Series s;
  double a = static_cast<double>(a0);
  for (;;) {
    const double t = 4.0 * square_ratio(a);
    if (t < kSeriesThreshold) {
      s.tail_bound = tail_bound_from(t);
      break;
    }
    s.terms.push_back(t);
    s.value += t;
    a = a >= 1024.0 ? kInf : std::ldexp(1.0, static_cast<int>(a));
  }
  return s;
}

double epsilon0(std::uint64_t a0) { return epsilon0_series(a0).value; }

ConstantsReport constants(std::uint64_t a0) {
  const Epsilon0Series eps = epsilon0_series(a0);
  ConstantsReport r;
  r.a0 = a0;
  r.epsilon0 = eps.value;
  r.epsilon0_tail_bound = eps.tail_bound;
  const double log_q = std::log1p(eps.value);

  double a = static_cast<double>(a0);  // a_{k-2}
  for (std::size_t k = 2;; ++k) {
    const double t = weight_series_term(a, log_q);
    if (t < kSeriesThreshold) {
      r.truncation_k = k;
      r.C1_tail_bound = tail_bound_from(t);
      break;
    }
    r.terms.push_back(SeriesTerm{k, a, t});
    r.C1 += t;
    a = a >= 1024.0 ? kInf : std::ldexp(1.0, static_cast<int>(a));
  }
  r.log_w1_per_e1 = log_w1_per_e1(a0);
  r.C2 = r.C1 + r.log_w1_per_e1;
  r.C = std::exp(r.C2);
  return r;
}

MainBoundReport verify_main_bound(std::uint64_t a0, std::size_t j, BoundMode mode) {
  const ConstantsReport c = constants(a0);
  MainBoundReport r;
  r.a0 = a0;
  r.j = j;
  r.mode = mode;
  r.C2 = c.C2;

  std::optional<BouchParams> params;
  try {
    params = bouch_params(a0, j);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TooLarge || mode == BoundMode::Exact) throw;
  }
  if (params && params->L[j].bit_length() <= 256) r.bond_count = params->L[j].str();

  if (mode == BoundMode::Exact) {
    const BigCount w = exact_weight(*params, j);
    const BigCount bound = weight_recursion_bound(*params, j);
    if (w > bound) throw Error(ErrorCode::BoundViolated, "exact weight exceeds the recursive bound");
    const std::uint64_t len = params->L[j].to_u64();
    const double e = params->E[j].log();
    const double log_w = w.log();
    r.log_w_per_e = log_w / std::exp(e);
    r.l_over_e = static_cast<double>(len) / std::exp(e);
    r.margin_per_bond = (c.C2 * static_cast<double>(len) - log_w) / static_cast<double>(len);
    r.tight_C2 = log_w / static_cast<double>(len);
    const auto n_exact = BigCount::factorial(len).divide_exact(w);
    if (!n_exact) throw Error(ErrorCode::InternalNonDivisible, "L_j! is not divisible by W_j");
    r.log_n = n_exact->log();
    r.log_n_lower = log_factorial(len) - static_cast<double>(len) * c.C2;
  } else {
    const LogWeightBound lb = weight_recursion_bound_log(a0, j);
    r.log_w_per_e = lb.log_w_per_e;
    r.l_over_e = lb.l_over_e;
    r.margin_per_bond = c.C2 - lb.log_w_per_e / lb.l_over_e;
    r.tight_C2 = lb.log_w_per_e / lb.l_over_e;
    if (lb.log_w && params && params->L[j].fits_u64()) {
      const std::uint64_t len = params->L[j].to_u64();
      const double log_fact = log_factorial(len);
      r.log_n = log_fact - lb.log_w->ln;
      r.log_n_lower = log_fact - static_cast<double>(len) * c.C2;
    }
  }

  const double slack = kMarginTolerance * std::abs(c.C2);
  r.passed = r.margin_per_bond >= -slack;
  if (r.log_n && r.log_n_lower) r.passed = r.passed && *r.log_n >= *r.log_n_lower - slack * std::abs(*r.log_n_lower);
  if (!r.passed)
    throw Error(ErrorCode::BoundViolated, "margin per bond " + std::to_string(r.margin_per_bond) + " at a0=" +
                                              std::to_string(a0) + ", j=" + std::to_string(j));
  return r;
}

StructureReport structure_fractions(std::uint64_t a0, std::size_t j) {
  if (j < 2) throw Error(ErrorCode::InvalidArgument, "structure fractions need j >= 2");
  const auto a = tower_sequence(a0, j);
  StructureReport r;
  r.a0 = a0;
  r.j = j;
  const Epsilon0Series eps = epsilon0_series(a0);
  r.epsilon0 = eps.value;

  double ratios = 0.0;
  for (std::size_t k = 2; k <= j; ++k) ratios += square_ratio(a[k - 2]);
  r.l_over_e = 1.0 + 4.0 * ratios;
  r.first_generation_fraction = 1.0 / r.l_over_e;
  r.backbone_fraction_bound = 4.0 * square_ratio(a[j - 2]);
  r.backbone_fraction = r.backbone_fraction_bound / r.l_over_e;

  r.exact = a[j - 2] <= static_cast<double>(kExactTowerExponentLimit);
  if (!r.exact) {
    constexpr double kRel = 1e-12;
    r.ele_holds = r.l_over_e >= 1.0 && r.l_over_e <= (1.0 + r.epsilon0) * (1.0 + kRel);
    r.backbone_holds = r.backbone_fraction <= r.backbone_fraction_bound * (1.0 + kRel);
    return r;
  }

  mpq_class sum = 0;
  for (std::size_t k = 2; k <= j; ++k) sum += exact_square_ratio(static_cast<std::uint64_t>(a[k - 2]));
  mpq_class q = 1 + 4 * sum;
  q.canonicalize();
  mpq_class backbone = 4 * exact_square_ratio(static_cast<std::uint64_t>(a[j - 2]));
  mpq_class backbone_bound = backbone;
  backbone /= q;

  // With the sequences held exactly, take L_j/E_j and l_j/L_j from the
  // actual bond counts instead of the closed form.
  std::optional<BouchParams> params;
  try {
    params = bouch_params(a0, j);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TooLarge) throw;
  }
  if (params) {
    const BigCount len = bond_count(*params, j);
    mpq_class measured(len.mpz(), params->E[j].mpz());
    measured.canonicalize();
    if (measured != q) throw Error(ErrorCode::InternalMismatch, "L_j/E_j differs from the closed form");
    backbone = mpq_class(params->ell[j].mpz(), len.mpz());
    backbone.canonicalize();
  }

  // Exact partial sum of the eps0 series: every term held exactly is a lower
  // bound on eps0, and L_j/E_j - 1 is itself such a partial sum.
  mpq_class eps_lower = 0;
  for (double am = static_cast<double>(a0); am <= static_cast<double>(kExactTowerExponentLimit);
       am = am >= 1024.0 ? kInf : std::ldexp(1.0, static_cast<int>(am))) {
    eps_lower += 4 * exact_square_ratio(static_cast<std::uint64_t>(am));
  }
  r.l_over_e_exact = fraction_string(q);
  r.ele_holds = q >= 1 && q <= 1 + eps_lower;
  r.backbone_holds = backbone <= backbone_bound;
  return r;
}

}  // namespace bouch
