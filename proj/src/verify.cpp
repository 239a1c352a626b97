#include "bouch/verify.hpp"

#include <cmath>
#include <functional>

#include "bouch/analytics.hpp"
#include "bouch/bethe.hpp"
#include "bouch/error.hpp"
#include "bouch/tree_generators.hpp"

namespace bouch {

namespace {

CheckResult check(std::string name, const std::function<std::string()>& body) {
  try {
    std::string failure = body();
    return CheckResult{std::move(name), failure.empty(), std::move(failure)};
  } catch (const std::exception& e) {
    return CheckResult{std::move(name), false, e.what()};
  }
}

BigCount odd_double_factorial(std::uint64_t n) {
  BigCount out(1);
  for (std::uint64_t k = n; k >= 1; k -= 2) {
    out *= BigCount(k);
    if (k < 2) break;
  }
  return out;
}

std::string oracle_mismatch(const RootedTree& t) {
  const BigCount enumerated = enumerate_growth_orders(t);
  if (enumerated * tree_weight(t) != BigCount::factorial(t.size()))
    return "enumerated " + enumerated.str() + " * W != L! for L=" + std::to_string(t.size());
  return {};
}

}  // namespace

RootedTree star_tree(std::size_t k) {
  static constexpr Site kArms[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  if (k < 1 || k > 4) throw Error(ErrorCode::InvalidArgument, "a lattice star has 1..4 arms");
  std::vector<Bond> bonds;
  for (std::size_t i = 0; i < k; ++i) bonds.emplace_back(Site{0, 0}, kArms[i]);
  return validate_tree(Site{0, 0}, std::move(bonds));
}

std::vector<std::pair<std::string, RootedTree>> fixture_trees() {
  std::vector<std::pair<std::string, RootedTree>> out;
  for (std::uint64_t n = 1; n <= 6; ++n) out.emplace_back("path " + std::to_string(n), path_tree(n));
  for (std::uint64_t n = 2; n <= 8; n += 2) out.emplace_back("comb " + std::to_string(n), comb_tree(n));
  for (std::size_t k = 1; k <= 4; ++k) out.emplace_back("star " + std::to_string(k), star_tree(k));
  // Root in the middle of a path, and a T-shape hanging off a stem.
  out.emplace_back("centred path",
                   validate_tree(Site{0, 0}, {Bond({-2, 0}, {-1, 0}), Bond({-1, 0}, {0, 0}), Bond({0, 0}, {1, 0}),
                                              Bond({1, 0}, {2, 0}), Bond({2, 0}, {3, 0})}));
  out.emplace_back("stem with T", validate_tree(Site{0, 0}, {Bond({0, 0}, {0, 1}), Bond({0, 1}, {0, 2}),
                                                             Bond({0, 2}, {-1, 2}), Bond({0, 2}, {1, 2}),
                                                             Bond({1, 2}, {1, 3}), Bond({-1, 2}, {-1, 1})}));
  return out;
}

std::vector<CheckResult> run_core_suite() {
  std::vector<CheckResult> out;
  for (const auto& [name, tree] : fixture_trees()) {
    out.push_back(check("oracle: " + name, [&] { return oracle_mismatch(tree); }));
  }
  out.push_back(check("oracle: 200 random trees, L <= 9", [] {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      const RootedTree t = random_lattice_tree(1 + seed % 9, seed);
      if (auto msg = oracle_mismatch(t); !msg.empty()) return "seed " + std::to_string(seed) + ": " + msg;
    }
    return std::string{};
  }));
  out.push_back(check("a-priori bounds 1 <= N <= L!", [] {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      const RootedTree t = random_lattice_tree(1 + seed % 30, seed);
      const BigCount n = growth_count(t);
      if (n < BigCount(1) || n > BigCount::factorial(t.size())) return "seed " + std::to_string(seed);
    }
    return std::string{};
  }));
  out.push_back(check("local weight recursion", [] {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      const RootedTree t = random_lattice_tree(40, seed);
      const Orientation o = orient_from_root(t);
      const WeightTable w = downstream_weights(t);
      for (std::size_t i = 0; i < t.size(); ++i) {
        std::uint64_t expect = 1;
        for (std::size_t c : o.children[i]) expect += w.weights[c];
        if (w.weights[i] != expect || (w.weights[i] == 1) != o.children[i].empty())
          return "seed " + std::to_string(seed);
      }
    }
    return std::string{};
  }));
  out.push_back(check("comb N = (L-1)!!", [] {
    for (std::uint64_t l = 2; l <= 10; l += 2) {
      if (growth_count(comb_tree(l)) != odd_double_factorial(l - 1)) return "L=" + std::to_string(l);
    }
    return std::string{};
  }));
  out.push_back(check("path N = 1, star N = k!", [] {
    for (std::uint64_t l = 1; l <= 12; ++l) {
      if (growth_count(path_tree(l)) != BigCount(1)) return "path " + std::to_string(l);
    }
    for (std::size_t k = 1; k <= 4; ++k) {
      if (growth_count(star_tree(k)) != BigCount::factorial(k)) return "star " + std::to_string(k);
    }
    return std::string{};
  }));
  return out;
}

std::vector<CheckResult> run_bouch_suite() {
  std::vector<CheckResult> out;
  const BouchParams p = bouch_params(1, 3);
  out.push_back(check("a0=1 trees validate, L = 4, 32, 768", [&] {
    const std::uint64_t expect[] = {0, 4, 32, 768};
    for (std::size_t j = 1; j <= 3; ++j) {
      const BouchParams pj = bouch_params(1, j);
      const RootedTree t = bouch_tree(pj);
      if (t.size() != expect[j] || bond_count(pj, j) != BigCount(expect[j])) return "j=" + std::to_string(j);
    }
    return std::string{};
  }));
  out.push_back(check("exact weight = materialized tree weight, <= recursive bound", [&] {
    for (std::size_t j = 1; j <= 3; ++j) {
      const BouchParams pj = bouch_params(1, j);
      const BigCount w = exact_weight(pj, j);
      if (w != tree_weight(bouch_tree(pj))) return "weight mismatch at j=" + std::to_string(j);
      if (j >= 2 && w > weight_recursion_bound(pj, j)) return "bound violated at j=" + std::to_string(j);
    }
    return std::string{};
  }));
  out.push_back(check("first-generation bonds = E_j", [&] {
    for (std::size_t j = 2; j <= 3; ++j) {
      const BouchParams pj = bouch_params(1, j);
      if (BigCount(bouch_tree_with_generations(pj).bonds_per_generation[1]) != pj.E[j])
        return "j=" + std::to_string(j);
    }
    return std::string{};
  }));
  out.push_back(check("epsilon0(20) in [1.45e-9, 1.46e-9]", [] {
    const auto s = epsilon0_series(20);
    if (s.value < 1.45e-9 || s.value > 1.46e-9) return "got " + std::to_string(s.value);
    if (s.tail_bound >= 1e-20 * s.value) return std::string("tail bound too large");
    return std::string{};
  }));
  out.push_back(check("main bound margin >= 0", [] {
    for (std::uint64_t a0 : {1, 2, 20}) {
      const std::size_t top = a0 == 20 ? 6 : 8;
      for (std::size_t j = 1; j <= top; ++j) verify_main_bound(a0, j, BoundMode::Log);
    }
    verify_main_bound(1, 3, BoundMode::Exact);
    return std::string{};
  }));
  out.push_back(check("E_j <= L_j <= (1+eps0) E_j and backbone fraction", [] {
    for (std::uint64_t a0 : {1, 2, 3, 20}) {
      for (std::size_t j = 2; j <= 6; ++j) {
        const auto r = structure_fractions(a0, j);
        if (!r.ele_holds || !r.backbone_holds) return "a0=" + std::to_string(a0) + " j=" + std::to_string(j);
      }
    }
    return std::string{};
  }));
  return out;
}

std::vector<CheckResult> run_bethe_suite() {
  std::vector<CheckResult> out;
  for (std::size_t l = 1; l <= 7; ++l) {
    out.push_back(check("Bethe L=" + std::to_string(l), [l] {
      const BigCount closed = *BigCount::factorial(l + 2).divide_exact(BigCount(2));
      if (bethe_growth_count(l) != closed) return std::string("growth count != (L+2)!/2");
      for (const auto& t : bethe_trees(l)) {
        if (bethe_growth_enumerated(t) != bethe_growth_hook(t)) return std::string("per-tree counts disagree");
      }
      const BetheReport r = bethe_existence_bound(l);
      if (!r.tree_count_within_9L) return std::string("tree count exceeds 9^L");
      if (!r.partition_identity) return std::string("partition identity fails");
      if (!r.average_at_least_product || !r.average_exceeds_factorial) return std::string("pigeonhole bound fails");
      if (!r.maximizer_at_least_average) return std::string("maximizer below average");
      return std::string{};
    }));
  }
  return out;
}

}  // namespace bouch
