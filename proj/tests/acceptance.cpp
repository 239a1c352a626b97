// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bouch/analytics.hpp"
#include "bouch/bethe.hpp"
#include "bouch/error.hpp"
#include "bouch/lattice_tree.hpp"
#include "bouch/tree_generators.hpp"
#include "bouch/tree_io.hpp"
#include "bouch/verify.hpp"

using namespace bouch;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<Outcome()> body;
};

BigCount double_factorial(std::uint64_t n) {
  BigCount out(1);
  for (std::uint64_t k = n; k > 1; k -= 2) out *= BigCount(k);
  return out;
}

Outcome growth_oracle() {
  Outcome out;
  std::vector<std::pair<std::string, RootedTree>> trees = fixture_trees();
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t bonds = 1 + seed % 9;
    trees.emplace_back("random L=" + std::to_string(bonds) + " seed=" + std::to_string(seed),
                       random_lattice_tree(bonds, seed));
  }
  for (const auto& [name, tree] : trees) {
    BigCount lhs = enumerate_growth_orders(tree);
    lhs *= tree_weight(tree);
    out.require(lhs == BigCount::factorial(tree.size()), name);
  }
  out.detail = out.passed ? std::to_string(trees.size()) + " trees" : out.detail;
  return out;
}

Outcome comb_family() {
  Outcome out;
  for (std::uint64_t l : {2, 4, 6, 8, 10}) {
    const RootedTree comb = comb_tree(l);
    const BigCount expected = double_factorial(l - 1);
    out.require(growth_count(comb) == expected, "formula, L=" + std::to_string(l));
    if (l <= 8) out.require(enumerate_growth_orders(comb) == expected, "oracle, L=" + std::to_string(l));
  }
  return out;
}

Outcome bouch_small() {
  Outcome out;
  const std::uint64_t expected_bonds[] = {0, 4, 32, 768};
  for (std::size_t j = 1; j <= 3; ++j) {
    const BouchParams p = bouch_params(1, j);
    const std::string tag = "j=" + std::to_string(j);
    const RootedTree t = bouch_tree(p);  // validation rejects overlaps
    out.require(t.size() == expected_bonds[j], tag + " materialized size");
    out.require(p.L[j] == BigCount(expected_bonds[j]), tag + " L_j");
    out.require(bond_count(p, j) == BigCount(expected_bonds[j]), tag + " two bond-count routes");
    out.require(exact_weight(p, j) == tree_weight(t), tag + " exact weight vs materialized");
    if (j >= 2) out.require(exact_weight(p, j) <= weight_recursion_bound(p, j), tag + " weight recursion bound");
  }
  return out;
}

Outcome first_generation() {
  Outcome out;
  for (std::size_t j : {2, 3}) {
    const BouchParams p = bouch_params(1, j);
    const HierarchicalTree h = bouch_tree_with_generations(p);
    out.require(BigCount(h.bonds_per_generation.at(1)) == p.E[j], "j=" + std::to_string(j));
  }
  return out;
}

Outcome epsilon0_value() {
  Outcome out;
  const Epsilon0Series s = epsilon0_series(20);
  std::ostringstream d;
  d.precision(12);
  d << "epsilon0(20)=" << s.value << " tail=" << s.tail_bound;
  out.require(s.value >= 1.45e-9 && s.value <= 1.46e-9, d.str());
  out.require(s.tail_bound < 1e-20 * s.value, "tail " + d.str());
  if (out.passed) out.detail = d.str();
  return out;
}

Outcome main_bound() {
  Outcome out;
  struct Range {
    std::uint64_t a0;
    std::size_t max_j;
  };
  std::size_t checked = 0;
  double worst = INFINITY;
  for (const Range r : {Range{1, 12}, Range{2, 12}, Range{20, 8}}) {
    const ConstantsReport c = constants(r.a0);
    out.require(c.C > 1.0, "C > 1 for a0=" + std::to_string(r.a0));
    for (std::size_t j = 1; j <= r.max_j; ++j) {
      const std::string tag = "a0=" + std::to_string(r.a0) + " j=" + std::to_string(j);
      try {
        const MainBoundReport m = verify_main_bound(r.a0, j, BoundMode::Log);
        out.require(m.passed && m.margin_per_bond >= -kMarginTolerance * m.C2, tag);
        if (m.log_n && m.log_n_lower) out.require(*m.log_n >= *m.log_n_lower * (1 + kMarginTolerance), tag + " log N");
        worst = std::min(worst, m.margin_per_bond);
        ++checked;
      } catch (const Error& e) {
        out.require(false, tag + ": " + e.what());
      }
    }
    // Small generations also in exact arithmetic.
    for (std::size_t j = 1; j <= (r.a0 == 1 ? 3u : r.a0 == 2 ? 2u : 0u); ++j) {
      const MainBoundReport m = verify_main_bound(r.a0, j, BoundMode::Exact);
      out.require(m.passed, "exact a0=" + std::to_string(r.a0) + " j=" + std::to_string(j));
      ++checked;
    }
  }
  if (out.passed) {
    std::ostringstream d;
    d << checked << " (a0, j) pairs, smallest margin per bond " << worst;
    out.detail = d.str();
  }
  return out;
}

Outcome structure() {
  Outcome out;
  struct Case {
    std::uint64_t a0;
    std::size_t j;
  };
  std::size_t exact = 0;
  std::size_t total = 0;
  for (const Case c : {Case{1, 2}, Case{1, 3}, Case{1, 4}, Case{1, 5}, Case{1, 6}, Case{1, 8}, Case{2, 2}, Case{2, 3},
                       Case{2, 4}, Case{2, 6}, Case{3, 2}, Case{3, 3}, Case{3, 5}, Case{20, 2}, Case{20, 3},
                       Case{20, 4}, Case{20, 6}}) {
    const StructureReport s = structure_fractions(c.a0, c.j);
    const std::string tag = "a0=" + std::to_string(c.a0) + " j=" + std::to_string(c.j);
    out.require(s.ele_holds, tag + " E <= L <= (1+eps0) E");
    out.require(s.backbone_holds, tag + " backbone fraction");
    out.require(s.backbone_fraction <= s.backbone_fraction_bound * (1 + 1e-12), tag + " backbone fraction (float)");
    exact += s.exact ? 1 : 0;
    ++total;
  }
  if (out.passed) out.detail = std::to_string(exact) + " of " + std::to_string(total) + " cases in exact rationals";
  return out;
}

Outcome bethe() {
  Outcome out;
  for (std::size_t l = 1; l <= 7; ++l) {
    const std::string tag = "L=" + std::to_string(l);
    const BigCount expected = *BigCount::factorial(l + 2).divide_exact(BigCount(2));
    out.require(bethe_growth_count(l) == expected, tag + " growth count");
    const BetheReport r = bethe_existence_bound(l);
    out.require(r.tree_count_within_9L, tag + " tree count <= 9^L");
    out.require(r.partition_identity, tag + " partition identity");
    out.require(r.average_exceeds_factorial, tag + " average > L!/9^L");
    out.require(r.maximizer_at_least_average, tag + " maximizer");
  }
  return out;
}

// CLI ------------------------------------------------------------------------

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string("\"") + BOUCHTREE_EXE + "\" " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[1 << 14];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string quoted(const fs::path& p) { return "\"" + p.string() + "\""; }

Outcome cli_contract() {
  Outcome out;
  const fs::path golden = GOLDEN_DIR;
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"path5", "gen path --bonds 5"},
      {"comb4", "gen comb --bonds 4"},
      {"bouch_1_2", "gen bouch --a0 1 --gen 2"},
  };
  for (const auto& [name, gen_args] : cases) {
    const fs::path json = golden / (name + ".json");
    const std::vector<std::pair<std::string, std::string>> commands = {
        {name + ".json", gen_args},
        {name + ".count.json", "count " + quoted(json)},
        {name + ".dot", "export --format dot " + quoted(json)},
        {name + ".svg", "export --format svg " + quoted(json)},
    };
    for (const auto& [file, args] : commands) {
      const RunResult first = run(args);
      const RunResult second = run(args);
      out.require(first.exit_code == 0, file + ": exit " + std::to_string(first.exit_code));
      out.require(first.out == second.out, file + ": output differs between runs");
      out.require(fs::exists(golden / file) && first.out == slurp(golden / file), file + ": differs from golden");
    }
  }

  const fs::path scratch = fs::temp_directory_path() / ("bouchtree_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(scratch);
  {
    std::ofstream(scratch / "bad.json") << "{\"root\":[0,0],\"bonds\":[[[0,0],[2,0]]]}";
    std::ofstream(scratch / "garbage.json") << "not json";
    std::ofstream(scratch / "wide.json") << run("gen path --bonds 100001").out;
  }
  const std::vector<std::pair<std::string, int>> exits = {
      {"count " + quoted(scratch / "bad.json"), 2},
      {"count " + quoted(scratch / "garbage.json"), 2},
      {"export --format svg " + quoted(scratch / "garbage.json"), 2},
      {"gen comb --bonds 5", 2},
      {"gen bouch --a0 20 --gen 2", 2},
      {"gen path --bonds 3 --frobnicate", 2},
      {"frobnicate", 2},
      {"export --format svg " + quoted(scratch / "wide.json"), 3},
      {"oracle --cap 2 " + quoted(golden / "comb4.json"), 3},
      {"oracle " + quoted(golden / "bouch_1_2.json"), 3},
      {"bethe --bonds 9", 3},
      {"oracle " + quoted(golden / "comb4.json"), 0},
      {"verify --suite bethe", 0},
  };
  for (const auto& [args, expected] : exits) {
    const int got = run(args).exit_code;
    out.require(got == expected,
                "'" + args + "' exited " + std::to_string(got) + ", expected " + std::to_string(expected));
  }
  fs::remove_all(scratch);
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "growth-order oracle on random trees and fixtures", 60, growth_oracle},
      {2, "comb family N = (L-1)!!", 5, comb_family},
      {3, "hierarchical trees, a0=1, j<=3", 30, bouch_small},
      {4, "first-generation bonds equal E_j", 30, first_generation},
      {5, "epsilon0(20) and series tail", 1, epsilon0_value},
      {6, "main bound certification", 5, main_bound},
      {7, "structure fractions", 30, structure},
      {8, "Bethe lattice counting", 120, bethe},
      {9, "CLI goldens and exit codes", 120, cli_contract},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.passed && secs > c.budget_s) {
      o.passed = false;
      o.detail = "over time budget";
    }
    std::printf("%s %d %s (%.2fs / %.0fs)%s%s\n", o.passed ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                c.budget_s, o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
    failures += o.passed ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
