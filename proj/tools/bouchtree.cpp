// bouchtree: command-line front end for the lattice-tree growth library.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input,
// 3 resource guard (TooLarge, CapExceeded). `gen` reports every error,
// including an oversized request, as invalid input.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bouch/analytics.hpp"
#include "bouch/bethe.hpp"
#include "bouch/error.hpp"
#include "bouch/lattice_tree.hpp"
#include "bouch/report_json.hpp"
#include "bouch/tree_generators.hpp"
#include "bouch/tree_io.hpp"
#include "bouch/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitGuard = 3;

constexpr std::size_t kOracleDefaultMaxBonds = 12;

int exit_code_for(bouch::ErrorCode code) {
  using bouch::ErrorCode;
  switch (code) {
    case ErrorCode::TooLarge:
    case ErrorCode::CapExceeded:
      return kExitGuard;
    case ErrorCode::InternalNonDivisible:
    case ErrorCode::InternalMismatch:
    case ErrorCode::BoundViolated:
      return kExitFailed;
    default:
      return kExitInvalid;
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw bouch::Error(bouch::ErrorCode::InvalidArgument, "cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

struct Options {
  std::uint64_t bonds = 0;
  std::uint64_t seed = 0;
  std::uint64_t a0 = 20;
  std::size_t generation = 4;
  std::string mode = "log";
  std::vector<std::uint64_t> ells;
  std::vector<std::uint64_t> bs;
  std::string input = "-";
  std::optional<std::string> cap;
  std::string format = "dot";
  std::string suite = "all";
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rooted lattice trees: growth-order counting and Bouch's hierarchical construction"};
  app.require_subcommand(1);
  Options opt;

  auto* gen = app.add_subcommand("gen", "generate a tree as canonical JSON");
  gen->require_subcommand(1);
  auto* gen_path = gen->add_subcommand("path", "horizontal path rooted at its left end");
  gen_path->add_option("--bonds", opt.bonds, "number of bonds")->required();
  auto* gen_comb = gen->add_subcommand("comb", "comb with L/2 teeth");
  gen_comb->add_option("--bonds", opt.bonds, "number of bonds (even)")->required();
  auto* gen_bouch = gen->add_subcommand("bouch", "Bouch's hierarchical tree T_j");
  gen_bouch->add_option("--a0", opt.a0, "seed of the tower a_k = 2^a_{k-1}")->default_val(20);
  gen_bouch->add_option("--gen", opt.generation, "generation j")->required();
  auto* gen_random = gen->add_subcommand("random", "seeded random lattice tree");
  gen_random->add_option("--bonds", opt.bonds, "number of bonds")->required();
  gen_random->add_option("--seed", opt.seed, "RNG seed")->required();
  auto* gen_custom = gen->add_subcommand("custom", "hierarchical tree with explicit sequences");
  gen_custom->add_option("--ells", opt.ells, "backbone lengths l_1,l_2,...")->delimiter(',')->required();
  gen_custom->add_option("--bs", opt.bs, "branch counts b_2,b_3,...")->delimiter(',');

  auto* count = app.add_subcommand("count", "exact L, W(T) and N(T) = L!/W(T)");
  count->add_option("input", opt.input, "tree JSON file, '-' for stdin");

  auto* oracle = app.add_subcommand("oracle", "brute-force count of growth orders");
  oracle->add_option("input", opt.input, "tree JSON file, '-' for stdin");
  oracle->add_option("--cap", opt.cap, "give up once the count exceeds this");

  auto* analyze = app.add_subcommand("analyze", "constants and bound certification for T_j");
  analyze->add_option("--a0", opt.a0, "seed of the tower")->default_val(20);
  analyze->add_option("--gen", opt.generation, "generation j")->default_val(4);
  analyze->add_option("--mode", opt.mode, "exact or log")->check(CLI::IsMember({"exact", "log"}))->default_val("log");

  auto* bethe = app.add_subcommand("bethe", "Bethe-lattice counting argument by brute force");
  bethe->add_option("--bonds", opt.bonds, "number of bonds (1..8)")->required();

  auto* verify = app.add_subcommand("verify", "run the built-in invariant suites");
  verify->add_option("--suite", opt.suite, "core, bouch, bethe or all")
      ->check(CLI::IsMember({"core", "bouch", "bethe", "all"}))
      ->default_val("all");

  auto* exporter = app.add_subcommand("export", "render a tree as Graphviz DOT or SVG");
  exporter->add_option("input", opt.input, "tree JSON file, '-' for stdin");
  exporter->add_option("--format", opt.format, "dot or svg")->check(CLI::IsMember({"dot", "svg"}))->default_val("dot");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    if (gen->parsed()) {
      bouch::RootedTree tree = [&] {
        if (gen_path->parsed()) return bouch::path_tree(opt.bonds);
        if (gen_comb->parsed()) return bouch::comb_tree(opt.bonds);
        if (gen_bouch->parsed()) return bouch::bouch_tree(bouch::bouch_params(opt.a0, opt.generation));
        if (gen_random->parsed()) return bouch::random_lattice_tree(opt.bonds, opt.seed);
        return bouch::custom_hierarchical_tree(opt.ells, opt.bs).tree;
      }();
      std::cout << bouch::to_json(tree);
      return kExitOk;
    }

    if (count->parsed()) {
      const auto tree = bouch::tree_from_json(read_input(opt.input));
      std::cout << bouch::count_json(tree.size(), bouch::tree_weight(tree), bouch::growth_count(tree)).dump()
                << "\n";
      return kExitOk;
    }

    if (oracle->parsed()) {
      const auto tree = bouch::tree_from_json(read_input(opt.input));
      std::optional<bouch::BigCount> cap;
      if (opt.cap) cap = bouch::BigCount::from_string(*opt.cap);
      if (!cap && tree.size() > kOracleDefaultMaxBonds)
        throw bouch::Error(bouch::ErrorCode::TooLarge, std::to_string(tree.size()) + " bonds; pass --cap to enumerate");
      const bouch::BigCount n = bouch::enumerate_growth_orders(tree, cap);
      bouch::ordered_json out;
      out["L"] = tree.size();
      out["N_enumerated"] = n.str();
      std::cout << out.dump() << "\n";
      return kExitOk;
    }

    if (analyze->parsed()) {
      const auto mode = opt.mode == "exact" ? bouch::BoundMode::Exact : bouch::BoundMode::Log;
      const auto consts = bouch::constants(opt.a0);
      const auto bound = bouch::verify_main_bound(opt.a0, opt.generation, mode);
      bouch::ordered_json out;
      out["a0"] = opt.a0;
      out["j"] = opt.generation;
      const auto consts_json = bouch::constants_json(consts);
      const auto bound_json = bouch::main_bound_json(bound);
      for (const auto& [k, v] : consts_json.items()) {
        if (k != "a0") out[k] = v;
      }
      for (const auto& [k, v] : bound_json.items()) {
        if (k != "a0" && k != "j" && k != "C2") out[k] = v;
      }
      if (opt.generation >= 2)
        out["structure"] = bouch::structure_json(bouch::structure_fractions(opt.a0, opt.generation));
      std::cout << out.dump(2) << "\n";
      return kExitOk;
    }

    if (bethe->parsed()) {
      const auto report = bouch::bethe_existence_bound(opt.bonds);
      std::cout << bouch::bethe_json(report).dump(2) << "\n";
      const bool ok = report.partition_identity && report.tree_count_within_9L && report.average_at_least_product &&
                      report.average_exceeds_factorial && report.maximizer_at_least_average;
      return ok ? kExitOk : kExitFailed;
    }

    if (verify->parsed()) {
      std::vector<bouch::CheckResult> results;
      auto add = [&](std::vector<bouch::CheckResult> more) {
        results.insert(results.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
      };
      if (opt.suite == "core" || opt.suite == "all") add(bouch::run_core_suite());
      if (opt.suite == "bouch" || opt.suite == "all") add(bouch::run_bouch_suite());
      if (opt.suite == "bethe" || opt.suite == "all") add(bouch::run_bethe_suite());
      std::size_t failed = 0;
      for (const auto& r : results) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
        if (!r.passed) {
          std::cout << ": " << r.detail;
          ++failed;
        }
        std::cout << "\n";
      }
      std::cout << (results.size() - failed) << "/" << results.size() << " checks passed\n";
      return failed == 0 ? kExitOk : kExitFailed;
    }

    if (exporter->parsed()) {
      const auto tree = bouch::tree_from_json(read_input(opt.input));
      std::cout << (opt.format == "svg" ? bouch::to_svg(tree) : bouch::to_dot(tree));
      return kExitOk;
    }
  } catch (const bouch::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (gen->parsed()) return kExitInvalid;
    return exit_code_for(e.code());
  }
  return kExitInvalid;
}
